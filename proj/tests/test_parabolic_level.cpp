#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "swampstab/level.hpp"
#include "swampstab/selftest.hpp"

using namespace swampstab;

namespace {

ParabolicStructure worked_parabolic() {
  ParabolicStructure ps;
  ps.flag_type = {1};
  ps.x0_flag = {Subspace::coordinate(2, {1})};
  ps.beta = {1};
  ps.delta2 = rat(1, 4);
  return ps;
}

// r=2 boundary decomposition: stratum (1,2), W_1 = <e2>, W'_1 = <e1>,
// unit blocks, l = (0).
CompletedHomDecomposition boundary_dec() {
  CompletedHomDecomposition dec;
  dec.r = 2;
  dec.stratum = {1, 2};
  dec.l = {rat(0)};
  dec.w = {Subspace::coordinate(2, {2})};
  dec.wprime = {Subspace::coordinate(2, {1})};
  dec.v = {{{rat(1)}}, {{rat(1)}}};
  return dec;
}

}  // namespace

TEST_CASE("parabolic degree") {
  const ParabolicStructure ps = worked_parabolic();
  CHECK(pardeg(-1, Subspace::coordinate(2, {1}), ps) == rat(-3, 4));
  CHECK(pardeg(-1, Subspace::coordinate(2, {2}), ps) == rat(-1));
  CHECK(pardeg(0, Subspace::full(2), ps) == rat(1, 4));  // d + delta2 sum beta_i r_i
  CHECK(ps.admissible());
  CHECK(ps.parabolic_weights() == std::vector<Rational>{rat(1, 4)});
}

TEST_CASE("parabolic stability") {
  const ParabolicStructure ps = worked_parabolic();
  SubbundleCandidate line;
  line.rank = 1;
  line.degree = -1;
  line.x0 = Subspace::coordinate(2, {1});
  const StabilityReport report = parabolic_stable(2, 0, ps, {line});
  CHECK(report.verdict == Verdict::stable);
  CHECK(parabolic_margin(2, 0, ps, line) == rat(1, 4) - rat(-3, 2));

  // Tuned delta2 producing an exact tie: margin = (d + x) rk - 2(degF + x'),
  // with degF = 0 and full intersection the tie needs delta2 solving
  // delta2*1 - 2*delta2*1 = 0 - 0, i.e. any delta2 with equal slopes.
  ParabolicStructure tie = ps;
  SubbundleCandidate even;
  even.rank = 1;
  even.degree = 0;
  even.x0 = Subspace::coordinate(2, {2});  // no intersection with U_1
  // margin = (0 + delta2)*1 - (0 + 0)*2 = delta2 > 0; and with intersection:
  SubbundleCandidate meet = even;
  meet.x0 = Subspace::coordinate(2, {1});
  // margin = delta2 - 2 delta2 = -delta2 < 0: unstable witness.
  const StabilityReport mixed = parabolic_stable(2, 0, tie, {even, meet});
  CHECK(mixed.verdict == Verdict::unstable);
  REQUIRE(mixed.witness.has_value());
  CHECK(mixed.witness->degrees == std::vector<long>{0});

  // delta2 = 0 reduces to the ordinary slope comparison.
  ParabolicStructure plain = ps;
  plain.delta2 = rat(0);
  CHECK(parabolic_margin(2, 0, plain, line) == rat(2));
}

TEST_CASE("parabolic equivalence with the decorated functional") {
  const ParabolicStructure ps = worked_parabolic();
  std::vector<SubbundleCandidate> candidates;
  for (long d = -2; d <= 1; ++d) {
    SubbundleCandidate c1, c2;
    c1.rank = c2.rank = 1;
    c1.degree = c2.degree = d;
    c1.x0 = Subspace::coordinate(2, {1});
    c2.x0 = Subspace::span(2, {{rat(1), rat(1)}});
    candidates.push_back(c1);
    candidates.push_back(c2);
  }
  CHECK(parabolic_equivalence_oracle(2, 0, ps, candidates));
  // The worked pair matches exactly, not only in sign.
  for (const auto& cand : candidates)
    CHECK(decorated_margin(2, 0, ps, cand) == parabolic_margin(2, 0, ps, cand));
}

TEST_CASE("seshadri level structures") {
  SeshadriLevel level;
  level.f = {{rat(1), rat(0)}, {rat(0), rat(0)}};  // rank-1 map killing e2
  CHECK(seshadri_c(level, Subspace::coordinate(2, {2})) == 0);
  CHECK(seshadri_c(level, Subspace::coordinate(2, {1})) == 1);
  CHECK(seshadri_c(level, Subspace::full(2)) == 1);  // monotone in the fiber

  SubbundleCandidate cand;
  cand.rank = 1;
  cand.degree = -1;
  cand.x0 = Subspace::coordinate(2, {1});
  const StabilityReport report = seshadri_stable(2, 0, level, rat(1, 3), {cand});
  CHECK(report.verdict == Verdict::stable);
  // (0 - 1/3)*1 - (-1 - 1/3)*2 = -1/3 + 8/3 = 7/3.
  CHECK(report.functional_values[0].second == rat(7, 3));
}

TEST_CASE("omega relations") {
  // Open stratum: f1 = id, l1 = 1, f2 = det(f1) = 1.
  CompletedHom open_point;
  open_point.r = 2;
  open_point.f = {{{rat(1), rat(0)}, {rat(0), rat(1)}}, {{rat(1)}}};
  open_point.l = {rat(1)};
  CHECK(omega_check(open_point) == std::vector<int>{2});

  // Boundary: rank-1 f1, l1 = 0, any nonzero f2.
  CompletedHom boundary;
  boundary.r = 2;
  boundary.f = {{{rat(1), rat(0)}, {rat(0), rat(0)}}, {{rat(1)}}};
  boundary.l = {rat(0)};
  CHECK(omega_check(boundary) == std::vector<int>{1, 2});

  CompletedHom broken = open_point;
  broken.f[1] = {{rat(2)}};
  CHECK_THROWS_AS(omega_check(broken), Error);

  CompletedHom zero = open_point;
  zero.f[0] = {{rat(0), rat(0)}, {rat(0), rat(0)}};
  CHECK_THROWS_AS(omega_check(zero), Error);
}

TEST_CASE("torus action") {
  CompletedHom point;
  point.r = 2;
  point.f = {{{rat(1), rat(0)}, {rat(0), rat(1)}}, {{rat(1)}}};
  point.l = {rat(1)};

  const CompletedHom same = torus_act({rat(1), rat(1)}, point);
  CHECK(same.f == point.f);
  CHECK(same.l == point.l);

  const CompletedHom acted = torus_act({rat(2), rat(3)}, point);
  CHECK(omega_check(acted) == std::vector<int>{2});
  CHECK(acted.l[0] == rat(4, 3));  // z1^2 / (z0 z2)

  CHECK_THROWS_AS(torus_act({rat(0), rat(1)}, point), Error);
}

TEST_CASE("reconstruction of the r=2 boundary point") {
  const CompletedHom point = reconstruct_completed_hom(boundary_dec());
  CHECK(point.l == std::vector<Rational>{rat(0)});
  // f1 is the rank-1 projection along W_1 followed by the inclusion of W'_1.
  CHECK(point.f[0] == Mat{{rat(1), rat(0)}, {rat(0), rat(0)}});
  // f2 is the unit map on the wedge line.
  CHECK(point.f[1] == Mat{{rat(1)}});
  CHECK(omega_check(point) == std::vector<int>{1, 2});

  // Open stratum: identity blocks give f1 = id, f2 = 1 via the determinant.
  CompletedHomDecomposition open_dec;
  open_dec.r = 2;
  open_dec.stratum = {2};
  open_dec.l = {rat(1)};
  open_dec.v = {{{rat(1), rat(0)}, {rat(0), rat(1)}}};
  const CompletedHom open_point = reconstruct_completed_hom(open_dec);
  CHECK(open_point.f[0] == Mat{{rat(1), rat(0)}, {rat(0), rat(1)}});
  CHECK(open_point.f[1] == Mat{{rat(1)}});
  CHECK(omega_check(open_point) == std::vector<int>{2});

  // Flag extraction inverts reconstruction.
  const ExtractedFlags flags = decompose_completed_hom(point);
  CHECK(flags.stratum == std::vector<int>{1, 2});
  CHECK(flags.w == boundary_dec().w);
  CHECK(flags.wprime == boundary_dec().wprime);
}

TEST_CASE("index bounds and c_i") {
  const std::vector<int> stratum = {1, 2};
  const CIndexBounds b1 = c_index_bounds(1, stratum, 2);
  CHECK(b1.j_minus == 0);
  CHECK(b1.i_minus == 0);
  CHECK(b1.j_plus == 1);
  CHECK(b1.i_plus == 1);
  const CIndexBounds b2 = c_index_bounds(2, stratum, 2);
  CHECK(b2.j_minus == 1);
  CHECK(b2.i_minus == 1);
  CHECK(b2.j_plus == 2);
  CHECK(b2.i_plus == 2);
  for (int r = 2; r <= 4; ++r)
    CHECK(c_index_bounds(r, {r}, r).i_plus == r);

  const std::vector<Subspace> w = {Subspace::coordinate(2, {2})};
  CHECK(c_i(Subspace::coordinate(2, {2}), w, stratum, 1, 2) == 0);
  CHECK(c_i(Subspace::coordinate(2, {1}), w, stratum, 1, 2) == 1);
  CHECK(c_i(Subspace::coordinate(2, {1}), w, stratum, 2, 2) == 1);
  // The full fiber has c_i = i.
  for (int i = 1; i <= 2; ++i) CHECK(c_i(Subspace::full(2), w, stratum, i, 2) == i);
}

TEST_CASE("level stability and the mu oracle") {
  const std::vector<int> stratum = {1, 2};
  const std::vector<Subspace> w = {Subspace::coordinate(2, {2})};
  const std::vector<Rational> theta = {rat(1), rat(1)};

  SubbundleCandidate cand;
  cand.rank = 1;
  cand.degree = -1;
  cand.x0 = Subspace::coordinate(2, {1});  // meets W_1 trivially: c1 = c2 = 1
  const Rational delta2 = rat(1, 3);
  CHECK(level_degree(-1, cand.x0, w, stratum, delta2, theta, 2) == rat(-5, 3));
  CHECK(level_degree(0, Subspace::full(2), w, stratum, delta2, theta, 2) == rat(-1));
  const StabilityReport report = level_stable(2, 0, w, stratum, delta2, theta, {cand});
  CHECK(report.verdict == Verdict::stable);
  CHECK(report.functional_values[0].second == rat(7, 3));

  // F with fiber inside W_1 has c1 = 0 and a strictly larger theta-degree.
  SubbundleCandidate inside = cand;
  inside.x0 = Subspace::coordinate(2, {2});
  CHECK(level_degree(-1, inside.x0, w, stratum, delta2, theta, 2) >
        level_degree(-1, cand.x0, w, stratum, delta2, theta, 2));

  // mu oracle worked values.
  WeightedFlag in_w = make_weighted_flag(2, {Subspace::coordinate(2, {2})}, {rat(1)});
  WeightedFlag off_w = make_weighted_flag(2, {Subspace::coordinate(2, {1})}, {rat(1)});
  CHECK(mu_level_oracle(in_w, w, stratum, 1, 2) == rat(-1));
  CHECK(mu_level_oracle(off_w, w, stratum, 1, 2) == rat(1));

  // Against the tensor engine on the reconstructed h_i form.
  const CompletedHomDecomposition dec = boundary_dec();
  for (int i = 1; i <= 2; ++i) {
    const DecorationForm form = h_i_form(dec, i);
    CHECK(mu_tensor(in_w, form) == mu_level_oracle(in_w, dec.w, dec.stratum, i, 2));
    CHECK(mu_tensor(off_w, form) == mu_level_oracle(off_w, dec.w, dec.stratum, i, 2));
  }
}

TEST_CASE("q polynomial and the lemma identity") {
  const std::vector<Rational> theta = {rat(1), rat(1)};
  CHECK(q_poly(0, theta, 2) == 0);
  CHECK(q_poly(2, theta, 2) == 0);
  CHECK(q_poly(1, theta, 2) == rat(1, 2));
  CHECK_THROWS_AS(q_poly(3, theta, 2), Error);

  const std::vector<int> stratum = {1, 2};
  const std::vector<Subspace> w = {Subspace::coordinate(2, {2})};
  const auto [lhs, rhs] =
      lemma_identity_check(Subspace::coordinate(2, {1}), 1, w, stratum, theta, 2);
  CHECK(lhs == rat(1));
  CHECK(rhs == rat(1));

  // Full fiber balances as well.
  const auto [lhs_full, rhs_full] =
      lemma_identity_check(Subspace::full(2), 2, w, stratum, theta, 2);
  CHECK(lhs_full == rhs_full);
}

TEST_CASE("ngo dac corollary agrees with level stability") {
  const std::vector<int> stratum = {1, 2};
  const std::vector<Subspace> w = {Subspace::coordinate(2, {2})};
  const std::vector<Rational> theta = {rat(1), rat(1)};
  const Rational delta2 = rat(1, 3);
  for (long degf = -2; degf <= 2; ++degf) {
    for (int which = 0; which < 2; ++which) {
      SubbundleCandidate cand;
      cand.rank = 1;
      cand.degree = degf;
      cand.x0 = Subspace::coordinate(2, {which + 1});
      const Rational deg_e =
          level_degree(0, Subspace::full(2), w, stratum, delta2, theta, 2);
      const Rational deg_f =
          level_degree(degf, cand.x0, w, stratum, delta2, theta, 2);
      CHECK((deg_e * cand.rank - deg_f * 2 >= 0) ==
            ngo_dac_condition(degf, 1, cand.x0, 0, 2, delta2, theta, stratum, w));
    }
  }
}

TEST_CASE("randomized specialization sweeps") {
  const auto par = sweeps::parabolic_sweep(7, 25);
  INFO(par.detail);
  CHECK(par.ok);
  const auto lemma = sweeps::level_lemma_sweep(8, 40);
  INFO(lemma.detail);
  CHECK(lemma.ok);
  const auto mu = sweeps::level_mu_sweep(9, 6);
  INFO(mu.detail);
  CHECK(mu.ok);
  const auto omega = sweeps::omega_sweep(10, 20);
  INFO(omega.detail);
  CHECK(omega.ok);
}
