#pragma once

#include "swampstab/parabolic.hpp"

namespace swampstab {

// Lexicographically ordered i-element subsets of {1, ..., r} (1-based).
std::vector<std::vector<int>> index_subsets(int r, int i);
long binom(int r, int i);

// Matrix of i x i minors: compound(A, i)[S][T] = det A[S, T], rows and
// columns indexed by index_subsets(r, i). Represents Lambda^i A.
Mat compound_matrix(const Mat& a, int i);

// A point of the completed-homomorphism space Omega': wedge-power maps
// f_1, ..., f_r (f_i of size binom(r,i) x binom(r,i)) and scalars
// l_1, ..., l_{r-1}, subject to
//   Lambda^i f_1 = (prod_{j<i} l_j^{i-j}) f_i,   f_i != 0.
struct CompletedHom {
  int r = 0;
  std::vector<Mat> f;      // f[i-1] is the i-th wedge map
  std::vector<Rational> l; // r-1 entries
};

// Decomposition data of a point on the stratum given by 1 <= r_1 < ... <
// r_{k+1} = r: descending source flag W_1 > ... > W_k (dim W_j = r - r_j),
// ascending target flag W'_1 < ... < W'_k (dim W'_j = r_j), and invertible
// block maps v_1, ..., v_{k+1} written in the echelon-complement bases
// (v_j maps W_{j-1}/W_j to W'_j/W'_{j-1}, square of size r_j - r_{j-1}).
struct CompletedHomDecomposition {
  int r = 0;
  std::vector<int> stratum;  // r_1 < ... < r_{k+1} = r
  std::vector<Rational> l;   // r-1 entries, l_j = 0 exactly for j in stratum
  std::vector<Subspace> w;       // descending, length k
  std::vector<Subspace> wprime;  // ascending, length k
  std::vector<Mat> v;            // k+1 invertible blocks
};

// Verifies the defining relations of Omega' and returns the stratum
// {i < r : l_i = 0} together with r. Throws RelationViolated or
// ZeroComponent on failure.
std::vector<int> omega_check(const CompletedHom& point);

// f'_i = z_i f_i, l'_i = z_{i-1}^{-1} z_i^2 z_{i+1}^{-1} l_i with z_0 = 1.
// z must have r nonzero entries.
CompletedHom torus_act(const std::vector<Rational>& z, const CompletedHom& point);

// Builds the point determined by the decomposition: h_i is the block tensor
// of compound matrices along the leading multidegree, transported from the
// adapted bases to standard coordinates, and f_i = (prod_{j<i, j not in
// stratum} l_j^{i-j}) h_i.
CompletedHom reconstruct_completed_hom(const CompletedHomDecomposition& dec);

// Inverse flag extraction for a point of known stratum: W_j as the kernel
// cut out by f_{r_j} on single vectors, W'_j from the image line of f_{r_j}.
struct ExtractedFlags {
  std::vector<int> stratum;
  std::vector<Subspace> w;
  std::vector<Subspace> wprime;
};
ExtractedFlags decompose_completed_hom(const CompletedHom& point);

// Index bounds at i relative to the stratum (r_0 = 0, r_{k+1} = r):
// j_-(i) = max{j : r_j < i}, i_- = r_{j_-}; j^+(i) = min{j : i <= r_j},
// i^+ = r_{j^+}.
struct CIndexBounds {
  int j_minus = 0;
  int i_minus = 0;
  int j_plus = 0;
  int i_plus = 0;
};
CIndexBounds c_index_bounds(int i, const std::vector<int>& stratum, int r);

// c_i(V, W_.) = min( dim V - dim(V cap W_{j^+}),
//                    dim V - dim(V cap W_{j_-}) + i - i_- )
// with the extended chain W_0 = full, W_{k+1} = 0.
int c_i(const Subspace& v, const std::vector<Subspace>& w,
        const std::vector<int>& stratum, int i, int r);

// deg_theta(F) = deg(F) - delta2 sum_i theta_i c_i(F_{x0}, W_.).
Rational level_degree(long f_degree, const Subspace& f_x0,
                      const std::vector<Subspace>& w,
                      const std::vector<int>& stratum, const Rational& delta2,
                      const std::vector<Rational>& theta, int r);

// Slope comparison of deg_theta over the candidates (c_i(E) = i).
StabilityReport level_stable(int r, long d, const std::vector<Subspace>& w,
                             const std::vector<int>& stratum,
                             const Rational& delta2,
                             const std::vector<Rational>& theta,
                             const std::vector<SubbundleCandidate>& candidates);

// h_i of the decomposition as a decoration form on V_{i, binom(r,i), 0}:
// copy u is the u-th wedge coordinate of h_i(v_1 ^ ... ^ v_i).
DecorationForm h_i_form(const CompletedHomDecomposition& dec, int i);

// Closed form for mu of h_i on a weighted fiber flag:
// sum_k alpha_k (r c_i(V_k, W_.) - i dim V_k).
Rational mu_level_oracle(const WeightedFlag& flag, const std::vector<Subspace>& w,
                         const std::vector<int>& stratum, int i, int r);

// q(s) = sum_{i <= s} theta_i i + sum_{i > s} theta_i s
//        - (s/r) sum_i theta_i i;  q(0) = q(r) = 0.
Rational q_poly(int s, const std::vector<Rational>& theta, int r);

// The combinatorial identity behind the level-structure bound:
//   sum_i theta_i (r c_i(F_{x0}, W_.) - i rk F)
//     = r sum_{s in stratum} ( q(i_-(s) + dim(Wbar_{j_-(s)} / Wbar_{j^+(s)}))
//                              - q(i_-(s)) ),
// with Wbar_j = F_{x0} cap W_j. Returns (lhs, rhs).
std::pair<Rational, Rational> lemma_identity_check(
    const Subspace& f_x0, int f_rank, const std::vector<Subspace>& w,
    const std::vector<int>& stratum, const std::vector<Rational>& theta, int r);

// Semistability inequality in intersection-dimension form:
//   deg(F) r <= deg(E) rk(F)
//     + r delta2 sum_{s in stratum} ( q(i_- + dim(Wbar_{j_-}/Wbar_{j^+}))
//                                     - q(i_-) ).
bool ngo_dac_condition(long f_degree, int f_rank, const Subspace& f_x0, long d,
                       int r, const Rational& delta2,
                       const std::vector<Rational>& theta,
                       const std::vector<int>& stratum,
                       const std::vector<Subspace>& w);

}  // namespace swampstab
