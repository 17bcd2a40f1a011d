#pragma once

#include <functional>

#include "swampstab/swamp.hpp"

namespace swampstab {

// Integral linearization (eta, theta1, theta2) with minimal scaling z.
struct Linearization {
  long z = 1;
  mpz_class eta;
  mpz_class theta1;
  mpz_class theta2;
};

// Weighted flag of the section space Y (dim p(n)), carried numerically:
// step dimensions, weights, and the ranks of the generated subsheaves.
struct SectionFlag {
  int total_dim = 0;  // p(n)
  std::vector<int> dims;
  std::vector<Rational> weights;
  std::vector<int> gen_ranks;

  int length() const { return static_cast<int>(dims.size()); }
};

// p(n) = d + r(n + 1 - g)
long euler_p(long n, long d, int r, int g);

Linearization make_linearization(long p_n, const Rational& delta1,
                                 const Rational& delta2, int a1, int a2, int r);

// sum_j alpha_j (p(n) rk(F_j) - r dim(Y_j))
Rational gies_weight_quot(const SectionFlag& flag, int r);

// -min over supported tuples of sum_j alpha_j (a_m dim(Y_j) - p(n) nu_j(i))
Rational gies_weight_tensor(const SectionFlag& flag,
                            const std::function<bool(const IndexTuple&)>& support,
                            int a_m);

// eta wM + theta1 wT1 + theta2 wT2
Rational total_gies_weight(const Linearization& lin, const Rational& wM,
                           const Rational& wT1, const Rational& wT2);

// Gamma_p: Y-flag with step dims the distinct nonzero h0 values, weights
// merged over steps with equal section space.
SectionFlag transport_gamma(const NumericFlag& eflag,
                            const std::vector<long>& h0_steps, long h0_total);

// Per-step data for Q_p.
struct GeneratedStep {
  int rank = 0;
  long degree = 0;
  bool h1_zero = true;
  std::vector<int> coords;  // coordinate support of the generated subbundle
};

// Q_p: E-flag over steps with vanishing first cohomology, weights merged
// over steps generating the same subbundle.
NumericFlag transport_q(const SectionFlag& yflag,
                        const std::vector<GeneratedStep>& generated, int rank);

}  // namespace swampstab
