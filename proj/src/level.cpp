#include "swampstab/level.hpp"

#include <algorithm>
#include <map>

namespace swampstab {

std::vector<std::vector<int>> index_subsets(int r, int i) {
  std::vector<std::vector<int>> out;
  if (i < 0 || i > r) return out;
  std::vector<int> cur(i);
  for (int j = 0; j < i; ++j) cur[j] = j + 1;
  while (true) {
    out.push_back(cur);
    int pos = i - 1;
    while (pos >= 0 && cur[pos] == r - (i - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int j = pos + 1; j < i; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

long binom(int r, int i) {
  if (i < 0 || i > r) return 0;
  long out = 1;
  for (int j = 1; j <= i; ++j) out = out * (r - i + j) / j;
  return out;
}

namespace {

Rational minor_det(const Mat& a, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  Mat sub(rows.size(), Vec(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      sub[i][j] = a[rows[i] - 1][cols[j] - 1];
  return determinant(sub);
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat out(m[0].size(), Vec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

bool mat_is_zero(const Mat& m) {
  for (const Vec& row : m)
    for (const Rational& x : row)
      if (x != 0) return false;
  return true;
}

int perm_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

void validate_decomposition(const CompletedHomDecomposition& dec) {
  const int r = dec.r;
  if (dec.stratum.empty() || dec.stratum.back() != r)
    throw Error("BadStratum", "stratum must end with the rank");
  int prev = 0;
  for (int s : dec.stratum) {
    if (s <= prev || s > r) throw Error("BadStratum", "stratum must ascend in 1..r");
    prev = s;
  }
  if (static_cast<int>(dec.l.size()) != r - 1)
    throw Error("DimensionMismatch", "l must have r-1 entries");
  for (int j = 1; j < r; ++j) {
    const bool in_stratum =
        std::find(dec.stratum.begin(), dec.stratum.end(), j) != dec.stratum.end();
    if (in_stratum != (dec.l[j - 1] == 0))
      throw Error("BadStratum", "l_j must vanish exactly on the stratum");
  }
  const int k = static_cast<int>(dec.stratum.size()) - 1;
  if (static_cast<int>(dec.w.size()) != k ||
      static_cast<int>(dec.wprime.size()) != k ||
      static_cast<int>(dec.v.size()) != k + 1)
    throw Error("DimensionMismatch", "flag/block lengths must match the stratum");
  for (int j = 1; j <= k; ++j) {
    if (dec.w[j - 1].dim() != r - dec.stratum[j - 1] ||
        dec.wprime[j - 1].dim() != dec.stratum[j - 1])
      throw Error("DimensionMismatch", "flag step dimensions must match the stratum");
    if (j > 1 && (!dec.w[j - 2].contains(dec.w[j - 1]) ||
                  !dec.wprime[j - 1].contains(dec.wprime[j - 2])))
      throw Error("NonAscendingChain", "W must descend and W' must ascend");
  }
  for (int j = 0; j <= k; ++j) {
    const int m = dec.stratum[j] - (j == 0 ? 0 : dec.stratum[j - 1]);
    if (static_cast<int>(dec.v[j].size()) != m)
      throw Error("DimensionMismatch", "block size must match the stratum gap");
    if (determinant(dec.v[j]) == 0)
      throw Error("NonIsomorphismV", "block maps must be invertible");
  }
}

// Adapted source basis rows: complements of W_j in W_{j-1}, block j has
// stratum[j] - stratum[j-1] rows; W_j is the span of the rows after r_j.
Mat source_adapted(const CompletedHomDecomposition& dec) {
  const int r = dec.r;
  const int k = static_cast<int>(dec.w.size());
  std::vector<Subspace> ext;
  ext.push_back(Subspace::full(r));
  for (const auto& s : dec.w) ext.push_back(s);
  ext.push_back(Subspace::zero(r));
  Mat rows;
  for (int j = 1; j <= k + 1; ++j)
    for (const Vec& v : echelon_complement(ext[j], ext[j - 1])) rows.push_back(v);
  return rows;
}

Mat target_adapted(const CompletedHomDecomposition& dec) {
  const int r = dec.r;
  const int k = static_cast<int>(dec.wprime.size());
  std::vector<Subspace> ext;
  ext.push_back(Subspace::zero(r));
  for (const auto& s : dec.wprime) ext.push_back(s);
  ext.push_back(Subspace::full(r));
  Mat rows;
  for (int j = 1; j <= k + 1; ++j)
    for (const Vec& v : echelon_complement(ext[j - 1], ext[j])) rows.push_back(v);
  return rows;
}

// h_i in standard coordinates: the block tensor of compound matrices along
// the leading multidegree, conjugated by the wedge powers of the adapted
// basis changes.
Mat h_matrix(const CompletedHomDecomposition& dec, int i) {
  const int r = dec.r;
  const long n = binom(r, i);
  const CIndexBounds cb = c_index_bounds(i, dec.stratum, r);
  const int t = i - cb.i_minus;  // occupancy of block j^+
  Rational prefactor = 1;
  for (int j = 1; j <= cb.j_minus; ++j) prefactor *= determinant(dec.v[j - 1]);
  const Mat& vblock = dec.v[cb.j_plus - 1];
  const int block_size = static_cast<int>(vblock.size());
  const int block_offset = cb.i_minus;  // adapted positions i_minus+1 .. i_plus

  // D in adapted wedge coordinates.
  Mat d(n, Vec(n, Rational(0)));
  const auto subsets_all = index_subsets(r, i);
  std::map<std::vector<int>, int> subset_pos;
  for (size_t p = 0; p < subsets_all.size(); ++p)
    subset_pos[subsets_all[p]] = static_cast<int>(p);
  const auto locals = index_subsets(block_size, t);
  const Mat comp = compound_matrix(vblock, t);
  auto global_subset = [&](const std::vector<int>& local) {
    std::vector<int> s;
    for (int p = 1; p <= cb.i_minus; ++p) s.push_back(p);
    for (int p : local) s.push_back(block_offset + p);
    return s;
  };
  for (size_t tt = 0; tt < locals.size(); ++tt) {
    const int col = subset_pos.at(global_subset(locals[tt]));
    for (size_t ss = 0; ss < locals.size(); ++ss) {
      const int row = subset_pos.at(global_subset(locals[ss]));
      d[row][col] = prefactor * comp[ss][tt];
    }
  }

  const Mat psrc_col = transpose(source_adapted(dec));
  const Mat ptgt_col = transpose(target_adapted(dec));
  return mat_mul(compound_matrix(ptgt_col, i),
                 mat_mul(d, compound_matrix(inverse(psrc_col), i)));
}

}  // namespace

Mat compound_matrix(const Mat& a, int i) {
  const int r = static_cast<int>(a.size());
  const auto subs = index_subsets(r, i);
  Mat out(subs.size(), Vec(subs.size()));
  for (size_t s = 0; s < subs.size(); ++s)
    for (size_t t = 0; t < subs.size(); ++t) out[s][t] = minor_det(a, subs[s], subs[t]);
  return out;
}

std::vector<int> omega_check(const CompletedHom& point) {
  const int r = point.r;
  if (static_cast<int>(point.f.size()) != r ||
      static_cast<int>(point.l.size()) != r - 1)
    throw Error("DimensionMismatch", "expected r wedge maps and r-1 scalars");
  for (int i = 1; i <= r; ++i) {
    const long n = binom(r, i);
    if (static_cast<long>(point.f[i - 1].size()) != n)
      throw Error("DimensionMismatch", "wedge map has wrong size");
    for (const Vec& row : point.f[i - 1])
      if (static_cast<long>(row.size()) != n)
        throw Error("DimensionMismatch", "wedge map has wrong size");
    if (mat_is_zero(point.f[i - 1]))
      throw Error("ZeroComponent", "every wedge map must be nonzero");
  }
  for (int i = 2; i <= r; ++i) {
    Rational c = 1;
    for (int j = 1; j < i; ++j) {
      Rational p = 1;
      for (int e = 0; e < i - j; ++e) p *= point.l[j - 1];
      c *= p;
    }
    const Mat lhs = compound_matrix(point.f[0], i);
    const long n = binom(r, i);
    for (long s = 0; s < n; ++s)
      for (long t = 0; t < n; ++t)
        if (lhs[s][t] != c * point.f[i - 1][s][t])
          throw Error("RelationViolated", "wedge relation fails");
  }
  std::vector<int> stratum;
  for (int j = 1; j < r; ++j)
    if (point.l[j - 1] == 0) stratum.push_back(j);
  stratum.push_back(r);
  return stratum;
}

CompletedHom torus_act(const std::vector<Rational>& z, const CompletedHom& point) {
  const int r = point.r;
  if (static_cast<int>(z.size()) != r)
    throw Error("DimensionMismatch", "torus element needs r coordinates");
  for (const Rational& zi : z)
    if (zi == 0) throw Error("ZeroComponent", "torus coordinates must be nonzero");
  CompletedHom out = point;
  for (int i = 1; i <= r; ++i)
    for (Vec& row : out.f[i - 1])
      for (Rational& x : row) x *= z[i - 1];
  for (int i = 1; i < r; ++i) {
    const Rational zprev = i == 1 ? Rational(1) : z[i - 2];
    out.l[i - 1] = point.l[i - 1] * z[i - 1] * z[i - 1] / (zprev * z[i]);
  }
  return out;
}

CompletedHom reconstruct_completed_hom(const CompletedHomDecomposition& dec) {
  validate_decomposition(dec);
  const int r = dec.r;
  // First build the normalized point with every nonzero l equal to 1.  There
  // the wedge relations hold on the nose: for i below the first stratum index
  // both sides equal h_i, and above it both sides vanish through the zero l.
  CompletedHom normalized;
  normalized.r = r;
  normalized.l.assign(r - 1, Rational(1));
  for (int j : dec.stratum)
    if (j < r) normalized.l[j - 1] = 0;
  normalized.f.resize(r);
  for (int i = 1; i <= r; ++i) normalized.f[i - 1] = h_matrix(dec, i);
  if (r == 1) return normalized;

  // Then move to the requested l-tuple along the free torus orbit: with
  // z_0 = z_1 = 1 the equation l'_j = z_j^2 / (z_{j-1} z_{j+1}) determines
  // z_{j+1} recursively; at stratum indices the value is unconstrained.
  std::vector<Rational> z(r, Rational(1));
  for (int j = 1; j < r; ++j) {
    const Rational zprev = j == 1 ? Rational(1) : z[j - 2];
    const bool on_stratum =
        std::find(dec.stratum.begin(), dec.stratum.end(), j) != dec.stratum.end();
    const Rational target = on_stratum ? Rational(1) : dec.l[j - 1];
    z[j] = z[j - 1] * z[j - 1] / (zprev * target);
  }
  return torus_act(z, normalized);
}

ExtractedFlags decompose_completed_hom(const CompletedHom& point) {
  ExtractedFlags out;
  out.stratum = omega_check(point);
  const int r = point.r;
  const int k = static_cast<int>(out.stratum.size()) - 1;
  for (int j = 1; j <= k; ++j) {
    const int i = out.stratum[j - 1];
    const Mat& fi = point.f[i - 1];
    const auto subs = index_subsets(r, i);
    std::map<std::vector<int>, int> pos;
    for (size_t p = 0; p < subs.size(); ++p) pos[subs[p]] = static_cast<int>(p);

    // W_j: v with f_i(v ^ e_U) = 0 for all (i-1)-subsets U.
    Mat constraints;
    for (const auto& u : index_subsets(r, i - 1)) {
      for (size_t s = 0; s < subs.size(); ++s) {
        Vec row(r, Rational(0));
        for (int c = 1; c <= r; ++c) {
          if (std::find(u.begin(), u.end(), c) != u.end()) continue;
          std::vector<int> merged = u;
          merged.push_back(c);
          std::sort(merged.begin(), merged.end());
          const int before =
              static_cast<int>(std::count_if(u.begin(), u.end(),
                                             [&](int x) { return x < c; }));
          const Rational sign = before % 2 == 0 ? 1 : -1;
          row[c - 1] += sign * fi[s][pos.at(merged)];
        }
        if (!is_zero_vec(row)) constraints.push_back(row);
      }
    }
    out.w.push_back(Subspace::span(r, nullspace(constraints, r)));

    // W'_j: v with v ^ omega = 0, omega spanning the rank-one image of f_i.
    Vec omega(subs.size(), Rational(0));
    bool found = false;
    for (size_t t = 0; t < subs.size() && !found; ++t) {
      for (size_t s = 0; s < subs.size(); ++s)
        if (fi[s][t] != 0) {
          for (size_t s2 = 0; s2 < subs.size(); ++s2) omega[s2] = fi[s2][t];
          found = true;
          break;
        }
    }
    Mat wedge_constraints;
    for (const auto& sp : index_subsets(r, i + 1)) {
      Vec row(r, Rational(0));
      for (size_t p = 0; p < sp.size(); ++p) {
        std::vector<int> rest;
        for (size_t q = 0; q < sp.size(); ++q)
          if (q != p) rest.push_back(sp[q]);
        const Rational sign = p % 2 == 0 ? 1 : -1;
        row[sp[p] - 1] += sign * omega[pos.at(rest)];
      }
      if (!is_zero_vec(row)) wedge_constraints.push_back(row);
    }
    out.wprime.push_back(Subspace::span(r, nullspace(wedge_constraints, r)));
  }
  return out;
}

CIndexBounds c_index_bounds(int i, const std::vector<int>& stratum, int r) {
  if (i < 1 || i > r) throw Error("DomainError", "index out of range");
  std::vector<int> ext;
  ext.push_back(0);
  for (int s : stratum) ext.push_back(s);
  CIndexBounds out;
  for (int j = 0; j < static_cast<int>(ext.size()); ++j) {
    if (ext[j] < i) {
      out.j_minus = j;
      out.i_minus = ext[j];
    }
    if (ext[j] >= i && out.i_plus == 0) {
      out.j_plus = j;
      out.i_plus = ext[j];
    }
  }
  return out;
}

int c_i(const Subspace& v, const std::vector<Subspace>& w,
        const std::vector<int>& stratum, int i, int r) {
  const CIndexBounds cb = c_index_bounds(i, stratum, r);
  const int k = static_cast<int>(w.size());
  auto ext = [&](int j) {
    if (j == 0) return Subspace::full(r);
    if (j > k) return Subspace::zero(r);
    return w[j - 1];
  };
  const int a = v.dim() - v.intersection_dim(ext(cb.j_plus));
  const int b = v.dim() - v.intersection_dim(ext(cb.j_minus)) + i - cb.i_minus;
  return std::min(a, b);
}

Rational level_degree(long f_degree, const Subspace& f_x0,
                      const std::vector<Subspace>& w,
                      const std::vector<int>& stratum, const Rational& delta2,
                      const std::vector<Rational>& theta, int r) {
  Rational out(f_degree);
  for (size_t i = 1; i <= theta.size(); ++i)
    out -= delta2 * theta[i - 1] *
           c_i(f_x0, w, stratum, static_cast<int>(i), r);
  return out;
}

StabilityReport level_stable(int r, long d, const std::vector<Subspace>& w,
                             const std::vector<int>& stratum,
                             const Rational& delta2,
                             const std::vector<Rational>& theta,
                             const std::vector<SubbundleCandidate>& candidates) {
  const Rational deg_e =
      level_degree(d, Subspace::full(r), w, stratum, delta2, theta, r);
  std::vector<std::pair<NumericFlag, Rational>> values;
  values.reserve(candidates.size());
  for (const auto& cand : candidates) {
    const Rational deg_f =
        level_degree(cand.degree, cand.x0, w, stratum, delta2, theta, r);
    values.emplace_back(candidate_flag(r, cand), deg_e * cand.rank - deg_f * r);
  }
  return report_from_margins(values);
}

DecorationForm h_i_form(const CompletedHomDecomposition& dec, int i) {
  validate_decomposition(dec);
  const int r = dec.r;
  const Mat h = h_matrix(dec, i);
  const auto subs = index_subsets(r, i);
  DecorationForm form;
  form.spec = TensorRepSpec{i, static_cast<int>(subs.size()), 0, r};
  for (size_t u = 0; u < subs.size(); ++u) {
    for (size_t t = 0; t < subs.size(); ++t) {
      if (h[u][t] == 0) continue;
      std::vector<int> perm = subs[t];
      std::sort(perm.begin(), perm.end());
      do {
        form.set(static_cast<int>(u) + 1, perm, Rational(perm_sign(perm)) * h[u][t]);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return form;
}

Rational mu_level_oracle(const WeightedFlag& flag, const std::vector<Subspace>& w,
                         const std::vector<int>& stratum, int i, int r) {
  Rational out = 0;
  for (int kk = 0; kk < flag.length(); ++kk)
    out += flag.weights[kk] *
           (Rational(r) * c_i(flag.subspaces[kk], w, stratum, i, r) -
            Rational(i) * flag.subspaces[kk].dim());
  return out;
}

Rational q_poly(int s, const std::vector<Rational>& theta, int r) {
  if (s < 0 || s > r) throw Error("OutOfRange", "q is defined for 0 <= s <= r");
  Rational out = 0;
  Rational total = 0;
  for (size_t i = 1; i <= theta.size(); ++i) {
    const long ii = static_cast<long>(i);
    out += theta[i - 1] * std::min<long>(ii, s);
    total += theta[i - 1] * ii;
  }
  return out - Rational(s) * total / r;
}

std::pair<Rational, Rational> lemma_identity_check(
    const Subspace& f_x0, int f_rank, const std::vector<Subspace>& w,
    const std::vector<int>& stratum, const std::vector<Rational>& theta, int r) {
  Rational lhs = 0;
  for (size_t i = 1; i <= theta.size(); ++i)
    lhs += theta[i - 1] *
           (Rational(r) * c_i(f_x0, w, stratum, static_cast<int>(i), r) -
            Rational(static_cast<long>(i)) * f_rank);
  const int k = static_cast<int>(w.size());
  auto ext = [&](int j) {
    if (j == 0) return Subspace::full(r);
    if (j > k) return Subspace::zero(r);
    return w[j - 1];
  };
  Rational rhs = 0;
  for (int s : stratum) {
    const CIndexBounds cb = c_index_bounds(s, stratum, r);
    const int step = f_x0.intersection_dim(ext(cb.j_minus)) -
                     f_x0.intersection_dim(ext(cb.j_plus));
    rhs += q_poly(cb.i_minus + step, theta, r) - q_poly(cb.i_minus, theta, r);
  }
  rhs *= r;
  return {lhs, rhs};
}

bool ngo_dac_condition(long f_degree, int f_rank, const Subspace& f_x0, long d,
                       int r, const Rational& delta2,
                       const std::vector<Rational>& theta,
                       const std::vector<int>& stratum,
                       const std::vector<Subspace>& w) {
  const int k = static_cast<int>(w.size());
  auto ext = [&](int j) {
    if (j == 0) return Subspace::full(r);
    if (j > k) return Subspace::zero(r);
    return w[j - 1];
  };
  Rational bound = 0;
  for (int s : stratum) {
    const CIndexBounds cb = c_index_bounds(s, stratum, r);
    const int step = f_x0.intersection_dim(ext(cb.j_minus)) -
                     f_x0.intersection_dim(ext(cb.j_plus));
    bound += q_poly(cb.i_minus + step, theta, r) - q_poly(cb.i_minus, theta, r);
  }
  return Rational(f_degree) * r <=
         Rational(d) * f_rank + Rational(r) * delta2 * bound;
}

}  // namespace swampstab
