#include "swampstab/flag.hpp"

namespace swampstab {

WeightedFlag make_weighted_flag(int ambient_dim,
                                const std::vector<Subspace>& subspaces,
                                const std::vector<Rational>& weights) {
  if (subspaces.size() != weights.size())
    throw Error("DimensionMismatch", "one weight per flag step required");
  for (const auto& w : weights)
    if (w <= 0) throw Error("NonPositiveWeight", "flag weights must be positive");
  int prev_dim = 0;
  for (size_t i = 0; i < subspaces.size(); ++i) {
    const Subspace& v = subspaces[i];
    if (v.ambient_dim() != ambient_dim)
      throw Error("DimensionMismatch", "subspace ambient dimension mismatch");
    if (v.dim() <= prev_dim || v.dim() >= ambient_dim)
      throw Error("NonAscendingChain", "flag dimensions must be strictly ascending and proper");
    if (i > 0 && !v.contains(subspaces[i - 1]))
      throw Error("NonAscendingChain", "flag subspaces must be nested");
    prev_dim = v.dim();
  }
  return WeightedFlag{ambient_dim, subspaces, weights};
}

WeightVector gamma_from_flag(const WeightedFlag& flag) {
  const int k = flag.length();
  Rational weighted_dims = 0;
  for (int j = 0; j < k; ++j) weighted_dims += flag.weights[j] * flag.subspaces[j].dim();
  WeightVector gamma;
  gamma.ambient_dim = flag.ambient_dim;
  Rational tail = 0;  // sum_{j >= i} alpha_j, accumulated from the right
  std::vector<Rational> values(k + 1);
  for (int i = k; i >= 0; --i) {
    values[i] = weighted_dims - tail * flag.ambient_dim;
    if (i > 0) tail += flag.weights[i - 1];
  }
  gamma.values = std::move(values);
  gamma.multiplicities.resize(k + 1);
  int prev = 0;
  for (int i = 0; i <= k; ++i) {
    const int d = (i < k) ? flag.subspaces[i].dim() : flag.ambient_dim;
    gamma.multiplicities[i] = d - prev;
    prev = d;
  }
  return gamma;
}

WeightedFlag flag_from_gamma(const WeightVector& gamma,
                             const std::vector<Subspace>& eigenspaces) {
  const int stages = gamma.stages();
  for (int i = 0; i + 1 < stages; ++i)
    if (gamma.values[i] >= gamma.values[i + 1])
      throw Error("NonAscendingWeights", "gamma values must be strictly ascending");
  if (static_cast<int>(eigenspaces.size()) != stages)
    throw Error("DimensionMismatch", "one eigenspace per gamma value required");
  std::vector<Subspace> chain;
  std::vector<Rational> weights;
  Subspace partial = Subspace::zero(gamma.ambient_dim);
  for (int i = 0; i + 1 < stages; ++i) {
    if (eigenspaces[i].dim() != gamma.multiplicities[i])
      throw Error("DimensionMismatch", "eigenspace dimension must match multiplicity");
    partial = partial.sum(eigenspaces[i]);
    chain.push_back(partial);
    weights.push_back((gamma.values[i + 1] - gamma.values[i]) / gamma.ambient_dim);
  }
  return make_weighted_flag(gamma.ambient_dim, chain, weights);
}

Rational mu_linear(const WeightedFlag& flag, const Vec& functional) {
  if (static_cast<int>(functional.size()) != flag.ambient_dim)
    throw Error("DimensionMismatch", "functional length mismatch");
  if (is_zero_vec(functional)) throw Error("ZeroFunctional", "functional must be nonzero");
  const WeightVector gamma = gamma_from_flag(flag);
  auto vanishes_on = [&](const Subspace& v) {
    for (const auto& b : v.basis()) {
      Rational acc = 0;
      for (int c = 0; c < flag.ambient_dim; ++c) acc += functional[c] * b[c];
      if (acc != 0) return false;
    }
    return true;
  };
  for (int i = 0; i < flag.length(); ++i)
    if (!vanishes_on(flag.subspaces[i])) return -gamma.values[i];
  return -gamma.values[flag.length()];
}

AdaptedBasis adapted_basis(const WeightedFlag& flag) {
  AdaptedBasis out;
  Subspace prev = Subspace::zero(flag.ambient_dim);
  for (int i = 0; i <= flag.length(); ++i) {
    const Subspace cur =
        (i < flag.length()) ? flag.subspaces[i] : Subspace::full(flag.ambient_dim);
    for (auto& row : echelon_complement(prev, cur)) {
      out.rows.push_back(std::move(row));
      out.stage.push_back(i + 1);
    }
    prev = cur;
  }
  return out;
}

}  // namespace swampstab
