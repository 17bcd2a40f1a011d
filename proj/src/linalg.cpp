#include "swampstab/linalg.hpp"

#include <algorithm>

namespace swampstab {

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

int rref(Mat& m) {
  if (m.empty()) return 0;
  const int ncols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < ncols && row < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    const Rational lead = m[row][col];
    for (int c = col; c < ncols; ++c) m[row][c] /= lead;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (int c = col; c < ncols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
  }
  m.erase(m.begin() + row, m.end());
  return row;
}

int rank_of(Mat m) { return rref(m); }

Subspace Subspace::span(int ambient_dim, const Mat& vectors) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient_dim)
      throw Error("DimensionMismatch", "vector length does not match ambient dimension");
    if (!is_zero_vec(v)) s.basis_.push_back(v);
  }
  rref(s.basis_);
  return s;
}

Subspace Subspace::coordinate(int ambient_dim, const std::vector<int>& coords) {
  Mat vectors;
  for (int c : coords) {
    if (c < 1 || c > ambient_dim)
      throw Error("DimensionMismatch", "coordinate index out of range");
    Vec v(ambient_dim, Rational(0));
    v[c - 1] = 1;
    vectors.push_back(v);
  }
  return span(ambient_dim, vectors);
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<int> all(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) all[i] = i + 1;
  return coordinate(ambient_dim, all);
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_)
    throw Error("DimensionMismatch", "vector length does not match ambient dimension");
  if (is_zero_vec(v)) return true;
  Mat m = basis_;
  m.push_back(v);
  return rref(m) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  Mat m = basis_;
  m.insert(m.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_dim_, m);
}

int Subspace::intersection_dim(const Subspace& other) const {
  return dim() + other.dim() - sum(other).dim();
}

Mat nullspace(const Mat& m, int ncols) {
  Mat r = m;
  rref(r);
  // Record pivot column of each reduced row.
  std::vector<int> pivot_cols;
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& row : r) {
    for (int c = 0; c < ncols; ++c)
      if (row[c] != 0) {
        pivot_cols.push_back(c);
        is_pivot[c] = true;
        break;
      }
  }
  Mat kernel;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(ncols, Rational(0));
    x[free] = 1;
    for (size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -r[i][free];
    kernel.push_back(x);
  }
  return kernel;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_)
    throw Error("DimensionMismatch", "ambient dimensions differ");
  const int dv = dim(), dw = other.dim();
  if (dv == 0 || dw == 0) return zero(ambient_dim_);
  // x in V cap W  <=>  x = sum a_i v_i = sum b_j w_j; solve for (a, b).
  Mat constraints(ambient_dim_, Vec(dv + dw, Rational(0)));
  for (int r = 0; r < ambient_dim_; ++r) {
    for (int i = 0; i < dv; ++i) constraints[r][i] = basis_[i][r];
    for (int j = 0; j < dw; ++j) constraints[r][dv + j] = -other.basis_[j][r];
  }
  Mat kernel = nullspace(constraints, dv + dw);
  Mat vectors;
  for (const auto& k : kernel) {
    Vec x(ambient_dim_, Rational(0));
    for (int i = 0; i < dv; ++i)
      for (int r = 0; r < ambient_dim_; ++r) x[r] += k[i] * basis_[i][r];
    vectors.push_back(x);
  }
  return span(ambient_dim_, vectors);
}

Mat echelon_complement(const Subspace& inner, const Subspace& outer) {
  if (!outer.contains(inner))
    throw Error("NonAscendingChain", "inner subspace not contained in outer");
  auto pivots = [](const Mat& basis) {
    std::vector<int> p;
    for (const auto& row : basis)
      for (int c = 0; c < static_cast<int>(row.size()); ++c)
        if (row[c] != 0) { p.push_back(c); break; }
    return p;
  };
  const auto inner_pivots = pivots(inner.basis());
  Mat complement;
  for (const auto& row : outer.basis()) {
    int lead = -1;
    for (int c = 0; c < static_cast<int>(row.size()); ++c)
      if (row[c] != 0) { lead = c; break; }
    if (std::find(inner_pivots.begin(), inner_pivots.end(), lead) == inner_pivots.end())
      complement.push_back(row);
  }
  return complement;
}

Rational determinant(Mat m) {
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(m[col], m[pivot]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Mat inverse(const Mat& m) {
  const int n = static_cast<int>(m.size());
  Mat aug(n, Vec(2 * n, Rational(0)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug[r][c] = m[r][c];
    aug[r][n + r] = 1;
  }
  if (rref(aug) != n) throw Error("NonIsomorphismV", "matrix is singular");
  Mat inv(n, Vec(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
  return inv;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int p = b.empty() ? 0 : static_cast<int>(b[0].size());
  Mat out(n, Vec(p, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (int c = 0; c < p; ++c) out[i][c] += a[i][j] * b[j][c];
    }
  return out;
}

}  // namespace swampstab
