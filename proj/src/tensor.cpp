#include "swampstab/tensor.hpp"

#include <algorithm>

namespace swampstab {

void DecorationForm::set(int copy, const std::vector<int>& index, const Rational& value) {
  if (copy < 1 || copy > spec.b)
    throw Error("DimensionMismatch", "copy index out of range");
  if (static_cast<int>(index.size()) != spec.a)
    throw Error("LengthMismatch", "multi-index length must equal the tensor power");
  for (int i : index)
    if (i < 1 || i > spec.base_dim)
      throw Error("DimensionMismatch", "multi-index entry out of range");
  std::vector<int> key;
  key.reserve(index.size() + 1);
  key.push_back(copy);
  key.insert(key.end(), index.begin(), index.end());
  if (value == 0)
    coeffs.erase(key);
  else
    coeffs[key] = value;
}

Rational DecorationForm::evaluate(int copy, const Mat& vectors) const {
  if (static_cast<int>(vectors.size()) != spec.a)
    throw Error("LengthMismatch", "need one vector per tensor slot");
  Rational acc = 0;
  for (const auto& [key, value] : coeffs) {
    if (key[0] != copy) continue;
    Rational term = value;
    for (int j = 0; j < spec.a && term != 0; ++j) term *= vectors[j][key[j + 1] - 1];
    acc += term;
  }
  return acc;
}

Rational tuple_weight(const IndexTuple& tuple, const WeightVector& gamma) {
  Rational w = 0;
  for (int t : tuple) {
    if (t < 1 || t > gamma.stages())
      throw Error("LengthMismatch", "tuple entry out of stage range");
    w += gamma.values[t - 1];
  }
  return w;
}

int tuple_nu(const IndexTuple& tuple, int j) {
  return static_cast<int>(std::count_if(tuple.begin(), tuple.end(),
                                        [j](int i) { return i <= j; }));
}

namespace {

// Iterate over all choices of one basis row per slot.
bool next_odometer(std::vector<int>& pos, const std::vector<int>& limits) {
  for (int i = static_cast<int>(pos.size()) - 1; i >= 0; --i) {
    if (++pos[i] < limits[i]) return true;
    pos[i] = 0;
  }
  return false;
}

const Subspace& stage_space(const WeightedFlag& flag, int t, const Subspace& full) {
  return (t <= flag.length()) ? flag.subspaces[t - 1] : full;
}

Rational tuple_mu_summand(const WeightedFlag& flag, const IndexTuple& tuple, int a) {
  Rational w = 0;
  for (int j = 1; j <= flag.length(); ++j)
    w += flag.weights[j - 1] *
         (a * flag.subspaces[j - 1].dim() - flag.ambient_dim * tuple_nu(tuple, j));
  return w;
}

bool dominates(const IndexTuple& big, const IndexTuple& small) {
  for (size_t i = 0; i < big.size(); ++i)
    if (big[i] < small[i]) return false;
  return true;
}

}  // namespace

bool support_nonzero(const DecorationForm& form, const WeightedFlag& flag,
                     const IndexTuple& tuple) {
  if (flag.ambient_dim != form.spec.base_dim)
    throw Error("DimensionMismatch", "flag ambient must equal base_dim");
  if (static_cast<int>(tuple.size()) != form.spec.a)
    throw Error("LengthMismatch", "tuple length must equal the tensor power");
  const Subspace full = Subspace::full(flag.ambient_dim);
  std::vector<const Mat*> bases;
  std::vector<int> limits;
  for (int t : tuple) {
    const Subspace& v = stage_space(flag, t, full);
    if (v.dim() == 0) return false;
    bases.push_back(&v.basis());
    limits.push_back(v.dim());
  }
  if (form.spec.a == 0) return !form.is_zero();
  for (int copy = 1; copy <= form.spec.b; ++copy) {
    std::vector<int> pos(form.spec.a, 0);
    do {
      Mat vectors;
      for (int j = 0; j < form.spec.a; ++j) vectors.push_back((*bases[j])[pos[j]]);
      if (form.evaluate(copy, vectors) != 0) return true;
    } while (next_odometer(pos, limits));
  }
  return false;
}

Rational mu_tensor(const WeightedFlag& flag, const DecorationForm& form) {
  if (form.is_zero()) throw Error("ZeroForm", "decoration form must be nonzero");
  const int a = form.spec.a;
  const int k = flag.length();
  if (a == 0) return Rational(0);
  bool found = false;
  Rational min_weight = 0;
  std::vector<IndexTuple> supported;
  IndexTuple tuple(a, 1);
  // Lexicographic enumeration; support and weight are both monotone under
  // componentwise-larger tuples, so dominated tuples cannot improve the min.
  while (true) {
    bool skip = false;
    for (const auto& s : supported)
      if (dominates(tuple, s)) { skip = true; break; }
    if (!skip && support_nonzero(form, flag, tuple)) {
      const Rational w = tuple_mu_summand(flag, tuple, a);
      if (!found || w < min_weight) min_weight = w;
      found = true;
      supported.push_back(tuple);
    }
    int i = a - 1;
    while (i >= 0 && tuple[i] == k + 1) tuple[i--] = 1;
    if (i < 0) break;
    ++tuple[i];
  }
  if (!found) throw Error("ZeroForm", "form vanishes on the full space");
  return -min_weight;
}

Rational mu_bruteforce_oracle(const WeightedFlag& flag, const DecorationForm& form) {
  if (form.is_zero()) throw Error("ZeroForm", "decoration form must be nonzero");
  const long m = lcm_of_denominators(flag.weights);
  WeightedFlag scaled = flag;
  for (auto& w : scaled.weights) w *= m;
  const WeightVector gamma = gamma_from_flag(scaled);
  const AdaptedBasis adapted = adapted_basis(flag);
  const int n = flag.ambient_dim;
  const int a = form.spec.a;
  if (a == 0) return Rational(0);
  bool found = false;
  Rational min_weight = 0;
  std::vector<int> pos(a, 0);
  std::vector<int> limits(a, n);
  for (int copy = 1; copy <= form.spec.b; ++copy) {
    std::fill(pos.begin(), pos.end(), 0);
    do {
      Mat vectors;
      for (int j = 0; j < a; ++j) vectors.push_back(adapted.rows[pos[j]]);
      if (form.evaluate(copy, vectors) == 0) continue;
      Rational w = 0;
      for (int j = 0; j < a; ++j) w += gamma.values[adapted.stage[pos[j]] - 1];
      if (!found || w < min_weight) min_weight = w;
      found = true;
    } while (next_odometer(pos, limits));
  }
  if (!found) throw Error("ZeroForm", "form has no nonzero eigencomponent");
  return -min_weight / m;
}

InducedFlagData induced_flag_data(const WeightedFlag& flag, const TensorRepSpec& spec) {
  if (spec.base_dim != flag.ambient_dim)
    throw Error("DimensionMismatch", "flag ambient must equal base_dim");
  const long m = lcm_of_denominators(flag.weights);
  WeightedFlag scaled = flag;
  for (auto& w : scaled.weights) w *= m;
  const WeightVector gamma = gamma_from_flag(scaled);
  const AdaptedBasis adapted = adapted_basis(flag);
  const int n = flag.ambient_dim;
  const long rep_dim = spec.rep_dim();

  struct Entry {
    Rational weight;
    std::vector<int> key;  // [copy, t_1, ..., t_a]
  };
  std::vector<Entry> entries;
  entries.reserve(rep_dim);
  for (int copy = 1; copy <= spec.b; ++copy) {
    std::vector<int> pos(spec.a, 0);
    std::vector<int> limits(spec.a, n);
    do {
      Rational w = 0;
      std::vector<int> key{copy};
      for (int j = 0; j < spec.a; ++j) {
        w += gamma.values[adapted.stage[pos[j]] - 1];
        key.push_back(pos[j] + 1);
      }
      entries.push_back({w, std::move(key)});
      if (spec.a == 0) break;
    } while (next_odometer(pos, limits));
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return x.weight != y.weight ? x.weight < y.weight : x.key < y.key;
  });

  InducedFlagData out;
  std::vector<Subspace> chain;
  std::vector<Rational> weights;
  for (size_t i = 0; i + 1 < entries.size(); ++i) {
    if (entries[i].weight == entries[i + 1].weight) continue;
    std::vector<int> prefix(i + 1);
    for (size_t d = 0; d <= i; ++d) prefix[d] = static_cast<int>(d + 1);
    chain.push_back(Subspace::coordinate(static_cast<int>(rep_dim), prefix));
    weights.push_back((entries[i + 1].weight - entries[i].weight) / (m * rep_dim));
  }
  out.flag = make_weighted_flag(static_cast<int>(rep_dim), chain, weights);
  for (auto& e : entries) out.basis_order.push_back(std::move(e.key));
  return out;
}

WeightedFlag induced_flag(const WeightedFlag& flag, const TensorRepSpec& spec) {
  return induced_flag_data(flag, spec).flag;
}

Vec form_in_adapted_coords(const DecorationForm& form, const WeightedFlag& flag,
                           const std::vector<std::vector<int>>& basis_order) {
  const AdaptedBasis adapted = adapted_basis(flag);
  Vec out;
  out.reserve(basis_order.size());
  for (const auto& key : basis_order) {
    Mat vectors;
    for (size_t j = 1; j < key.size(); ++j) vectors.push_back(adapted.rows[key[j] - 1]);
    out.push_back(form.evaluate(key[0], vectors));
  }
  return out;
}

DecorationForm plucker_form(const std::vector<Subspace>& chain,
                            const std::vector<int>& betas) {
  if (chain.empty() || chain.size() != betas.size())
    throw Error("NonAscendingChain", "need a nonempty chain with one multiplicity each");
  const int r = chain[0].ambient_dim();
  int prev = 0;
  for (const auto& u : chain) {
    if (u.ambient_dim() != r || u.dim() <= prev || u.dim() >= r)
      throw Error("NonAscendingChain", "chain must be strictly ascending and proper");
    prev = u.dim();
  }
  for (size_t j = 1; j < chain.size(); ++j)
    if (!chain[j].contains(chain[j - 1]))
      throw Error("NonAscendingChain", "chain subspaces must be nested");

  // Quotient coordinate maps Q_j : V -> V/U_j as (r - r_j) x r matrices.
  const Subspace full = Subspace::full(r);
  std::vector<Mat> quotients;
  for (const auto& u : chain) {
    Mat basis = u.basis();
    Mat comp = echelon_complement(u, full);
    Mat b = basis;
    b.insert(b.end(), comp.begin(), comp.end());
    // Coordinates of v in the row basis b are (b^T)^{-1} v.
    Mat bt(r, Vec(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) bt[i][j] = b[j][i];
    Mat inv = inverse(bt);
    Mat q(inv.begin() + u.dim(), inv.end());
    quotients.push_back(std::move(q));
  }

  int a = 0;
  std::vector<int> block_owner;  // chain index of each tensor slot block
  std::vector<int> block_size;
  for (size_t j = 0; j < chain.size(); ++j) {
    if (betas[j] <= 0) throw Error("NonPositiveWeight", "multiplicities must be positive");
    const int width = r - chain[j].dim();
    for (int rep = 0; rep < betas[j]; ++rep) {
      block_owner.push_back(static_cast<int>(j));
      block_size.push_back(width);
      a += width;
    }
  }

  DecorationForm form;
  form.spec = TensorRepSpec{a, 1, 0, r};
  std::vector<int> index(a, 0);
  std::vector<int> limits(a, r);
  do {
    Rational value = 1;
    int offset = 0;
    for (size_t blk = 0; blk < block_owner.size() && value != 0; ++blk) {
      const Mat& q = quotients[block_owner[blk]];
      const int w = block_size[blk];
      Mat minor(w, Vec(w));
      for (int row = 0; row < w; ++row)
        for (int col = 0; col < w; ++col) minor[row][col] = q[row][index[offset + col]];
      value *= determinant(minor);
      offset += w;
    }
    if (value != 0) {
      std::vector<int> idx(a);
      for (int j = 0; j < a; ++j) idx[j] = index[j] + 1;
      form.set(1, idx, value);
    }
  } while (next_odometer(index, limits));
  if (form.is_zero()) throw Error("ZeroForm", "Pluecker form vanished identically");
  return form;
}

}  // namespace swampstab
