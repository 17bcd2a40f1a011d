#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swampstab/tensor.hpp"

namespace swampstab {

// Desk-scale model of a decorated swamp of type (d, l): numeric invariants,
// the generic-fiber decoration phi and the x0-fiber decoration s. The
// optional split model (genus 0, E = O(d_1) + ... + O(d_r)) makes candidate
// enumeration and section counts exact.
struct SwampConfig {
  int rank = 0;
  long degree = 0;
  long line_degree = 0;  // type data only, enters no functional
  int genus = 0;
  TensorRepSpec rho_spec;
  TensorRepSpec sigma_spec;
  DecorationForm phi;  // on rho_spec, generic fiber
  DecorationForm s;    // on sigma_spec, fiber at x0
  std::optional<std::vector<long>> split_degrees;

  void validate() const;
};

// Weighted filtration of E by numeric data plus the two fiber chains
// (generic for phi, x0 for s) sharing one rank vector.
struct NumericFlag {
  std::vector<int> ranks;
  std::vector<long> degrees;
  std::vector<Rational> weights;
  std::vector<Subspace> generic_chain;
  std::vector<Subspace> x0_chain;

  int length() const { return static_cast<int>(ranks.size()); }
  WeightedFlag generic_flag(int rank) const;
  WeightedFlag x0_flag(int rank) const;
};

enum class Verdict { stable, semistable_not_stable, unstable, inconclusive };

std::string verdict_name(Verdict v);

struct StabilityReport {
  Verdict verdict = Verdict::inconclusive;
  std::optional<NumericFlag> witness;
  std::vector<std::pair<NumericFlag, Rational>> functional_values;
  // False when the verdict is relative to a user-supplied candidate list.
  bool exhaustive_candidates = false;
};

// M(E_., alpha) = sum_j alpha_j (deg(E) rk(E_j) - deg(E_j) rk(E))
Rational slope_excess(const SwampConfig& config, const NumericFlag& flag);

Rational mu1_of(const SwampConfig& config, const NumericFlag& flag);
Rational mu2_of(const SwampConfig& config, const NumericFlag& flag);

// M + delta1 mu1 + delta2 mu2
Rational stability_functional(const SwampConfig& config, const NumericFlag& flag,
                              const Rational& delta1, const Rational& delta2);

// Verdict over the supplied candidates. `exhaustive` marks candidates
// produced by enumerate_candidates on a split model; otherwise a positive
// outcome is reported as inconclusive (relative verdict only).
StabilityReport check_stability(const SwampConfig& config,
                                const std::vector<NumericFlag>& candidates,
                                const Rational& delta1, const Rational& delta2,
                                bool exhaustive = false);

// All flags of coordinate sub-sums of the split summands, length <= max_length,
// with unit weights.
std::vector<NumericFlag> enumerate_candidates(const SwampConfig& config,
                                              int max_length);

// h0(E(n)) on the split model (genus 0) or via Riemann-Roch under an asserted
// h1 vanishing.
long h0_split(const std::vector<long>& degrees, long n);

// M^s + delta1 mu1 + delta2 mu2 with h0 counts from the split model, or from
// Riemann-Roch when assume_h1_zero is set.
Rational section_functional(const SwampConfig& config, const NumericFlag& flag,
                            const Rational& delta1, const Rational& delta2,
                            long n, bool assume_h1_zero = false);

// (delta1 a1 + delta2 a2)(r-1)/r
Rational slope_bound_C(const Rational& delta1, const Rational& delta2, int a1,
                       int a2, int r);

bool is_critical(const SwampConfig& config, const NumericFlag& flag,
                 const Rational& delta1, const Rational& delta2);

// Associated graded object with leading-term decorations, expressed in the
// adapted (graded) basis of the flag chains. The flag itself maps to the
// coordinate chain of the same ranks in the deformed config.
SwampConfig admissible_deformation(const SwampConfig& config, const NumericFlag& flag);

// The coordinate-chain image of a flag inside admissible_deformation's output.
NumericFlag graded_image_flag(const NumericFlag& flag, int rank);

// Sorted distinct delta2 roots of the per-candidate functionals inside
// (lo, hi], delta2 > 0.
std::vector<Rational> delta_walls(const SwampConfig& config,
                                  const std::vector<NumericFlag>& candidates,
                                  const Rational& delta1, const Rational& lo,
                                  const Rational& hi);

}  // namespace swampstab
