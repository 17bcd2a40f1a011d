#pragma once

#include <map>
#include <vector>

#include "swampstab/flag.hpp"

namespace swampstab {

// The model representation V_{a,b,c} = (V^{tensor a})^{+b} (x) det^{-c}.
// The determinant twist carries weight zero under trace-free one-parameter
// subgroups, so it only enters the homogeneity degree.
struct TensorRepSpec {
  int a = 0;         // tensor power
  int b = 1;         // number of copies
  int c = 0;         // determinant twist
  int base_dim = 0;  // dim V

  int degree() const { return a - c * base_dim; }
  long rep_dim() const {
    long d = b;
    for (int i = 0; i < a; ++i) d *= base_dim;
    return d;
  }
};

// Sparse multilinear functional on V_{a,b,c}. Keys are [copy, i_1, ..., i_a]
// with 1-based entries; values are nonzero rationals.
struct DecorationForm {
  TensorRepSpec spec;
  std::map<std::vector<int>, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  void set(int copy, const std::vector<int>& index, const Rational& value);
  // f(v_1, ..., v_a) in the given copy, vectors in standard coordinates.
  Rational evaluate(int copy, const Mat& vectors) const;
};

using IndexTuple = std::vector<int>;  // entries in {1, ..., k+1}

Rational tuple_weight(const IndexTuple& tuple, const WeightVector& gamma);

// nu_j(i) = #{entries of the tuple <= j}
int tuple_nu(const IndexTuple& tuple, int j);

// True iff the form does not vanish identically on
// V_{t_1} x ... x V_{t_a} in at least one copy (V_{k+1} = ambient).
bool support_nonzero(const DecorationForm& form, const WeightedFlag& flag,
                     const IndexTuple& tuple);

// mu(V_., alpha, [f]) by minimization over supported index tuples.
Rational mu_tensor(const WeightedFlag& flag, const DecorationForm& form);

// Independent route: integral one-parameter subgroup from m*alpha, full
// eigenweight decomposition of the tensor basis.
Rational mu_bruteforce_oracle(const WeightedFlag& flag, const DecorationForm& form);

// Weighted flag of V_{a,b,c} induced by a weighted flag of V, together with
// the ordering of adapted basis tensors that realizes its subspaces as
// coordinate spans.
struct InducedFlagData {
  WeightedFlag flag;
  // basis_order[d] = [copy, t_1, ..., t_a] positions into the adapted basis
  std::vector<std::vector<int>> basis_order;
};
InducedFlagData induced_flag_data(const WeightedFlag& flag, const TensorRepSpec& spec);
WeightedFlag induced_flag(const WeightedFlag& flag, const TensorRepSpec& spec);

// The form as a dual vector on V_{a,b,c} in the coordinates of
// induced_flag_data's basis ordering.
Vec form_in_adapted_coords(const DecorationForm& form, const WeightedFlag& flag,
                           const std::vector<std::vector<int>>& basis_order);

// Pluecker decoration of a flag-variety point: the tensor-embedded functional
// tensor_j (Lambda^{r-r_j} V -> Lambda^{r-r_j}(V/U_j))^{beta_j}.
DecorationForm plucker_form(const std::vector<Subspace>& chain,
                            const std::vector<int>& betas);

}  // namespace swampstab
