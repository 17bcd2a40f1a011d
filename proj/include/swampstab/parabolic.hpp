#pragma once

#include "swampstab/swamp.hpp"

namespace swampstab {

// Quasi-parabolic structure at x0 with linearization multiplicities beta and
// scale delta2. Parabolic weights are alpha~_i = delta2 * sum_{j>=i} beta_j.
struct ParabolicStructure {
  std::vector<int> flag_type;     // r_1 < ... < r_k < r
  std::vector<Subspace> x0_flag;  // chain U_. of those dimensions
  std::vector<int> beta;          // positive multiplicities
  Rational delta2;

  int length() const { return static_cast<int>(flag_type.size()); }
  std::vector<Rational> parabolic_weights() const;
  bool admissible() const;  // alpha~_1 < 1
};

// Numeric subbundle candidate with its fiber at x0.
struct SubbundleCandidate {
  int rank = 0;
  long degree = 0;
  Subspace x0;
};

// Single-step flag carrying a candidate's numeric data and x0 fiber.
NumericFlag candidate_flag(int r, const SubbundleCandidate& cand);

// Verdict from per-candidate margins: negative -> unstable with witness,
// zero -> semistable-not-stable, all positive -> stable.
StabilityReport report_from_margins(
    const std::vector<std::pair<NumericFlag, Rational>>& values);

// pardeg(F) = deg(F) + delta2 sum_i beta_i dim(F_{x0} cap U_i)
Rational pardeg(long f_degree, const Subspace& f_x0, const ParabolicStructure& ps);

// Mehta-Seshadri slope comparison over the candidates.
StabilityReport parabolic_stable(int r, long d, const ParabolicStructure& ps,
                                 const std::vector<SubbundleCandidate>& candidates);

// Sign of pardeg(E) rk(F) - pardeg(F) rk(E) for one candidate.
Rational parabolic_margin(int r, long d, const ParabolicStructure& ps,
                          const SubbundleCandidate& cand);

// Decorated-swamp functional for the same candidate, with the Pluecker form
// of the parabolic flag as the x0 decoration and trivial rho.
Rational decorated_margin(int r, long d, const ParabolicStructure& ps,
                          const SubbundleCandidate& cand);

// True iff the decorated verdict matches the parabolic one on every
// candidate, compared sign by sign.
bool parabolic_equivalence_oracle(int r, long d, const ParabolicStructure& ps,
                                  const std::vector<SubbundleCandidate>& candidates);

// Seshadri level structure: a linear map from the x0 fiber, possibly singular.
struct SeshadriLevel {
  Mat f;  // r x r over the rationals
};

// (deg(E) - delta2) rk(F) - (deg(F) - delta2 c(F,f)) rk(E) over candidates,
// with c(F,f) = 0 iff f vanishes on F_{x0}.
StabilityReport seshadri_stable(int r, long d, const SeshadriLevel& level,
                                const Rational& delta2,
                                const std::vector<SubbundleCandidate>& candidates);

int seshadri_c(const SeshadriLevel& level, const Subspace& f_x0);

}  // namespace swampstab
