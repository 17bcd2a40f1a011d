#pragma once

#include <vector>

#include "swampstab/linalg.hpp"

namespace swampstab {

// Ascending chain of proper nonzero subspaces with positive rational weights.
// The trivial flag (length 0, empty weight tuple) is allowed.
struct WeightedFlag {
  int ambient_dim = 0;
  std::vector<Subspace> subspaces;
  std::vector<Rational> weights;

  int length() const { return static_cast<int>(subspaces.size()); }
};

// Eigenweights of a one-parameter subgroup: strictly ascending values with
// eigenspace multiplicities. Always trace-zero in this library.
struct WeightVector {
  int ambient_dim = 0;
  std::vector<Rational> values;
  std::vector<int> multiplicities;

  int stages() const { return static_cast<int>(values.size()); }
};

WeightedFlag make_weighted_flag(int ambient_dim,
                                const std::vector<Subspace>& subspaces,
                                const std::vector<Rational>& weights);

// gamma_i = sum_j alpha_j dim(V_j) - sum_{j >= i} alpha_j dim(V)
WeightVector gamma_from_flag(const WeightedFlag& flag);

// Inverse: alpha_j = (gamma_{j+1} - gamma_j) / ambient_dim, subspaces are
// the partial sums of the given eigenspaces.
WeightedFlag flag_from_gamma(const WeightVector& gamma,
                             const std::vector<Subspace>& eigenspaces);

// mu(V_., alpha, [f]) = -gamma_{i0} with i0 minimal such that f does not
// vanish on V_{i0} (V_{k+1} = ambient space).
Rational mu_linear(const WeightedFlag& flag, const Vec& functional);

// Basis of the ambient space adapted to the flag: stage i rows span the
// echelon complement of V_{i-1} inside V_i, with V_{k+1} the full space.
struct AdaptedBasis {
  Mat rows;                 // ambient_dim rows
  std::vector<int> stage;   // 1-based stage of each row
};
AdaptedBasis adapted_basis(const WeightedFlag& flag);

}  // namespace swampstab
