#pragma once

#include <vector>

#include "swampstab/rational.hpp"

namespace swampstab {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// In-place Gauss-Jordan reduction to reduced row-echelon form.
// Returns the rank; zero rows are removed.
int rref(Mat& m);

int rank_of(Mat m);

bool is_zero_vec(const Vec& v);

// A linear subspace of Q^n, canonicalized as the RREF basis of its row span.
// Equality of subspaces is therefore syntactic equality of bases.
class Subspace {
public:
  Subspace() : ambient_dim_(0) {}

  // Row span of `vectors` inside Q^ambient_dim. Zero vectors are dropped.
  static Subspace span(int ambient_dim, const Mat& vectors);

  // Span of the unit vectors e_i for i in `coords` (1-based).
  static Subspace coordinate(int ambient_dim, const std::vector<int>& coords);

  static Subspace zero(int ambient_dim) { return span(ambient_dim, {}); }
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Mat& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  int intersection_dim(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
  }
  bool operator!=(const Subspace& other) const { return !(*this == other); }

private:
  int ambient_dim_;
  Mat basis_;
};

// Basis vectors of `outer` completing a basis of `inner`, chosen as the
// RREF rows of outer whose pivots are not pivots of inner.
Mat echelon_complement(const Subspace& inner, const Subspace& outer);

// Solution space of m x = 0 as row vectors.
Mat nullspace(const Mat& m, int ncols);

Rational determinant(Mat m);

// Inverse of a square matrix; throws NonIsomorphismV if singular.
Mat inverse(const Mat& m);

Mat mat_mul(const Mat& a, const Mat& b);

}  // namespace swampstab
