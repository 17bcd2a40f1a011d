#include "swampstab/swamp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace swampstab {

namespace {

// Coordinate indices (1-based) when the subspace is a span of unit vectors.
std::optional<std::vector<int>> coordinate_indices(const Subspace& s) {
  std::vector<int> coords;
  for (const auto& row : s.basis()) {
    int unit = -1;
    for (int c = 0; c < s.ambient_dim(); ++c) {
      if (row[c] == 0) continue;
      if (unit >= 0 || row[c] != 1) return std::nullopt;
      unit = c;
    }
    coords.push_back(unit + 1);
  }
  return coords;
}

bool flag_is_coordinate(const NumericFlag& flag) {
  for (const auto& s : flag.generic_chain)
    if (!coordinate_indices(s)) return false;
  for (const auto& s : flag.x0_chain)
    if (!coordinate_indices(s)) return false;
  return true;
}

// Leading-term truncation of a form along a flag chain: coefficients in the
// adapted basis, restricted to the minimal supported eigenweight.
DecorationForm graded_decoration(const DecorationForm& form, const WeightedFlag& flag) {
  const AdaptedBasis adapted = adapted_basis(flag);
  const WeightVector gamma = gamma_from_flag(flag);
  const int n = flag.ambient_dim;
  const int a = form.spec.a;
  struct Term {
    std::vector<int> index;
    int copy;
    Rational value;
    Rational weight;
  };
  std::vector<Term> terms;
  bool found = false;
  Rational min_weight = 0;
  std::vector<int> pos(a, 0), limits(a, n);
  for (int copy = 1; copy <= form.spec.b; ++copy) {
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      Mat vectors;
      for (int j = 0; j < a; ++j) vectors.push_back(adapted.rows[pos[j]]);
      const Rational value = form.evaluate(copy, vectors);
      if (value != 0) {
        Rational w = 0;
        std::vector<int> idx(a);
        for (int j = 0; j < a; ++j) {
          w += gamma.values[adapted.stage[pos[j]] - 1];
          idx[j] = pos[j] + 1;
        }
        if (!found || w < min_weight) min_weight = w;
        found = true;
        terms.push_back({std::move(idx), copy, value, w});
      }
      int i = a - 1;
      while (i >= 0 && pos[i] == n - 1) pos[i--] = 0;
      if (i < 0) break;
      ++pos[i];
    }
  }
  if (!found) throw Error("ZeroForm", "decoration vanished in the graded basis");
  DecorationForm out;
  out.spec = form.spec;
  for (const auto& t : terms)
    if (t.weight == min_weight) out.set(t.copy, t.index, t.value);
  return out;
}

}  // namespace

void SwampConfig::validate() const {
  if (rank <= 0) throw Error("DimensionMismatch", "rank must be positive");
  if (rho_spec.base_dim != rank || sigma_spec.base_dim != rank)
    throw Error("DimensionMismatch", "representation base_dim must equal the rank");
  if (phi.is_zero()) throw Error("ZeroForm", "phi must be non-trivial");
  if (s.is_zero()) throw Error("ZeroForm", "s must be non-trivial");
  if (split_degrees) {
    if (static_cast<int>(split_degrees->size()) != rank)
      throw Error("DimensionMismatch", "split model needs one degree per summand");
    if (std::accumulate(split_degrees->begin(), split_degrees->end(), 0L) != degree)
      throw Error("DimensionMismatch", "split degrees must sum to the total degree");
    if (genus != 0)
      throw Error("DimensionMismatch", "split model requires genus 0");
  }
}

WeightedFlag NumericFlag::generic_flag(int rank) const {
  return make_weighted_flag(rank, generic_chain, weights);
}

WeightedFlag NumericFlag::x0_flag(int rank) const {
  return make_weighted_flag(rank, x0_chain, weights);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::semistable_not_stable: return "semistable-not-stable";
    case Verdict::unstable: return "unstable";
    default: return "inconclusive";
  }
}

Rational slope_excess(const SwampConfig& config, const NumericFlag& flag) {
  Rational m = 0;
  for (int j = 0; j < flag.length(); ++j)
    m += flag.weights[j] *
         (Rational(config.degree) * flag.ranks[j] - Rational(flag.degrees[j]) * config.rank);
  return m;
}

Rational mu1_of(const SwampConfig& config, const NumericFlag& flag) {
  return mu_tensor(flag.generic_flag(config.rank), config.phi);
}

Rational mu2_of(const SwampConfig& config, const NumericFlag& flag) {
  return mu_tensor(flag.x0_flag(config.rank), config.s);
}

Rational stability_functional(const SwampConfig& config, const NumericFlag& flag,
                              const Rational& delta1, const Rational& delta2) {
  if (delta1 <= 0 || delta2 <= 0)
    throw Error("NonPositiveWeight", "stability parameters must be positive");
  return slope_excess(config, flag) + delta1 * mu1_of(config, flag) +
         delta2 * mu2_of(config, flag);
}

StabilityReport check_stability(const SwampConfig& config,
                                const std::vector<NumericFlag>& candidates,
                                const Rational& delta1, const Rational& delta2,
                                bool exhaustive) {
  if (candidates.empty()) throw Error("EmptyCandidates", "no candidate flags supplied");
  StabilityReport report;
  report.exhaustive_candidates = exhaustive;
  std::optional<NumericFlag> zero_witness;
  for (const auto& flag : candidates) {
    const Rational value = stability_functional(config, flag, delta1, delta2);
    report.functional_values.emplace_back(flag, value);
    if (value < 0) {
      report.verdict = Verdict::unstable;
      report.witness = flag;
      return report;
    }
    if (value == 0 && !zero_witness) zero_witness = flag;
  }
  if (zero_witness) {
    report.verdict = Verdict::semistable_not_stable;
    report.witness = zero_witness;
  } else {
    report.verdict = Verdict::stable;
  }
  return report;
}

std::vector<NumericFlag> enumerate_candidates(const SwampConfig& config, int max_length) {
  if (!config.split_degrees)
    throw Error("NoSplitModel", "candidate enumeration needs a split model");
  const int r = config.rank;
  const auto& degs = *config.split_degrees;

  // All nonempty proper coordinate subsets, ordered by (size, lex).
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << r) - 1; ++mask) {
    std::vector<int> coords;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) coords.push_back(i + 1);
    subsets.push_back(coords);
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });

  std::vector<NumericFlag> out;
  std::vector<int> chain_idx;
  auto subset_contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  auto emit = [&]() {
    NumericFlag flag;
    for (int idx : chain_idx) {
      const auto& coords = subsets[idx];
      flag.ranks.push_back(static_cast<int>(coords.size()));
      long d = 0;
      for (int c : coords) d += degs[c - 1];
      flag.degrees.push_back(d);
      flag.weights.push_back(rat(1));
      const Subspace sp = Subspace::coordinate(r, coords);
      flag.generic_chain.push_back(sp);
      flag.x0_chain.push_back(sp);
    }
    out.push_back(std::move(flag));
  };
  std::function<void(size_t)> extend = [&](size_t start) {
    for (size_t i = start; i < subsets.size(); ++i) {
      if (!chain_idx.empty()) {
        const auto& prev = subsets[chain_idx.back()];
        if (subsets[i].size() <= prev.size() || !subset_contains(subsets[i], prev))
          continue;
      }
      chain_idx.push_back(static_cast<int>(i));
      emit();
      if (static_cast<int>(chain_idx.size()) < max_length) extend(i + 1);
      chain_idx.pop_back();
    }
  };
  if (max_length > 0) extend(0);
  return out;
}

long h0_split(const std::vector<long>& degrees, long n) {
  long h0 = 0;
  for (long d : degrees) h0 += std::max(0L, d + n + 1);
  return h0;
}

Rational section_functional(const SwampConfig& config, const NumericFlag& flag,
                            const Rational& delta1, const Rational& delta2, long n,
                            bool assume_h1_zero) {
  long h0_total = 0;
  std::vector<long> h0_steps(flag.length());
  if (assume_h1_zero) {
    h0_total = config.degree + config.rank * (n + 1 - config.genus);
    for (int j = 0; j < flag.length(); ++j)
      h0_steps[j] = flag.degrees[j] + flag.ranks[j] * (n + 1 - config.genus);
  } else if (config.split_degrees && flag_is_coordinate(flag)) {
    h0_total = h0_split(*config.split_degrees, n);
    for (int j = 0; j < flag.length(); ++j) {
      const auto coords = coordinate_indices(flag.generic_chain[j]);
      std::vector<long> sub;
      for (int c : *coords) sub.push_back((*config.split_degrees)[c - 1]);
      h0_steps[j] = h0_split(sub, n);
    }
  } else {
    throw Error("H0Unavailable",
                "need a split model with coordinate flags or an h1-vanishing assertion");
  }
  Rational ms = 0;
  for (int j = 0; j < flag.length(); ++j)
    ms += flag.weights[j] *
          (Rational(h0_total) * flag.ranks[j] - Rational(h0_steps[j]) * config.rank);
  return ms + delta1 * mu1_of(config, flag) + delta2 * mu2_of(config, flag);
}

Rational slope_bound_C(const Rational& delta1, const Rational& delta2, int a1, int a2,
                       int r) {
  if (r <= 0) throw Error("DimensionMismatch", "rank must be positive");
  return (delta1 * a1 + delta2 * a2) * rat(r - 1, r);
}

bool is_critical(const SwampConfig& config, const NumericFlag& flag,
                 const Rational& delta1, const Rational& delta2) {
  return stability_functional(config, flag, delta1, delta2) == 0;
}

SwampConfig admissible_deformation(const SwampConfig& config, const NumericFlag& flag) {
  config.validate();
  SwampConfig out = config;
  out.phi = graded_decoration(config.phi, flag.generic_flag(config.rank));
  out.s = graded_decoration(config.s, flag.x0_flag(config.rank));
  if (config.split_degrees && flag_is_coordinate(flag)) {
    // Regroup the split degrees so each flag step becomes a coordinate prefix.
    std::vector<long> regrouped;
    std::vector<bool> taken(config.rank, false);
    for (const auto& s : flag.generic_chain) {
      const auto coords = coordinate_indices(s);
      for (int c : *coords)
        if (!taken[c - 1]) {
          taken[c - 1] = true;
          regrouped.push_back((*config.split_degrees)[c - 1]);
        }
    }
    for (int c = 0; c < config.rank; ++c)
      if (!taken[c]) regrouped.push_back((*config.split_degrees)[c]);
    out.split_degrees = regrouped;
  } else {
    out.split_degrees.reset();
  }
  return out;
}

NumericFlag graded_image_flag(const NumericFlag& flag, int rank) {
  NumericFlag out;
  out.ranks = flag.ranks;
  out.degrees = flag.degrees;
  out.weights = flag.weights;
  for (int r : flag.ranks) {
    std::vector<int> coords(r);
    for (int c = 0; c < r; ++c) coords[c] = c + 1;
    out.generic_chain.push_back(Subspace::coordinate(rank, coords));
    out.x0_chain.push_back(Subspace::coordinate(rank, coords));
  }
  return out;
}

std::vector<Rational> delta_walls(const SwampConfig& config,
                                  const std::vector<NumericFlag>& candidates,
                                  const Rational& delta1, const Rational& lo,
                                  const Rational& hi) {
  if (candidates.empty()) throw Error("EmptyCandidates", "no candidate flags supplied");
  std::vector<Rational> walls;
  for (const auto& flag : candidates) {
    const Rational constant = slope_excess(config, flag) + delta1 * mu1_of(config, flag);
    const Rational mu2 = mu2_of(config, flag);
    if (mu2 == 0) continue;  // functional constant in delta2, no wall
    const Rational root = -constant / mu2;
    if (root > 0 && root > lo && root <= hi) walls.push_back(root);
  }
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  return walls;
}

}  // namespace swampstab
