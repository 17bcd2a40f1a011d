#include "swampstab/parabolic.hpp"

#include <numeric>

namespace swampstab {

std::vector<Rational> ParabolicStructure::parabolic_weights() const {
  std::vector<Rational> out(beta.size(), Rational(0));
  Rational tail = 0;
  for (int i = static_cast<int>(beta.size()) - 1; i >= 0; --i) {
    tail += beta[i];
    out[i] = delta2 * tail;
  }
  return out;
}

bool ParabolicStructure::admissible() const {
  const auto w = parabolic_weights();
  return w.empty() || w.front() < 1;
}

Rational pardeg(long f_degree, const Subspace& f_x0, const ParabolicStructure& ps) {
  Rational out(f_degree);
  for (int i = 0; i < ps.length(); ++i)
    out += ps.delta2 * ps.beta[i] * f_x0.intersection_dim(ps.x0_flag[i]);
  return out;
}

Rational parabolic_margin(int r, long d, const ParabolicStructure& ps,
                          const SubbundleCandidate& cand) {
  const Rational pd_e = pardeg(d, Subspace::full(r), ps);
  const Rational pd_f = pardeg(cand.degree, cand.x0, ps);
  return pd_e * cand.rank - pd_f * r;
}

NumericFlag candidate_flag(int r, const SubbundleCandidate& cand) {
  NumericFlag flag;
  flag.ranks = {cand.rank};
  flag.degrees = {cand.degree};
  flag.weights = {Rational(1)};
  std::vector<int> coords(cand.rank);
  std::iota(coords.begin(), coords.end(), 1);
  flag.generic_chain = {Subspace::coordinate(r, coords)};
  flag.x0_chain = {cand.x0};
  return flag;
}

StabilityReport report_from_margins(
    const std::vector<std::pair<NumericFlag, Rational>>& values) {
  StabilityReport report;
  report.functional_values = values;
  std::optional<NumericFlag> zero_witness;
  for (const auto& [flag, value] : values) {
    if (value < 0) {
      report.verdict = Verdict::unstable;
      report.witness = flag;
      return report;
    }
    if (value == 0 && !zero_witness) zero_witness = flag;
  }
  if (zero_witness) {
    report.verdict = Verdict::semistable_not_stable;
    report.witness = *zero_witness;
  } else {
    report.verdict = Verdict::stable;
  }
  return report;
}

StabilityReport parabolic_stable(int r, long d, const ParabolicStructure& ps,
                                 const std::vector<SubbundleCandidate>& candidates) {
  std::vector<std::pair<NumericFlag, Rational>> values;
  values.reserve(candidates.size());
  for (const auto& cand : candidates)
    values.emplace_back(candidate_flag(r, cand), parabolic_margin(r, d, ps, cand));
  return report_from_margins(values);
}

Rational decorated_margin(int r, long d, const ParabolicStructure& ps,
                          const SubbundleCandidate& cand) {
  SwampConfig config;
  config.rank = r;
  config.degree = d;
  config.line_degree = 0;
  config.genus = 0;
  config.rho_spec = TensorRepSpec{0, 1, 0, r};
  DecorationForm phi;
  phi.spec = config.rho_spec;
  phi.set(1, {}, Rational(1));
  config.phi = phi;
  config.s = plucker_form(ps.x0_flag, ps.beta);
  config.sigma_spec = config.s.spec;
  const NumericFlag flag = candidate_flag(r, cand);
  // mu1 vanishes for the trivial rho, so the functional is M + delta2 mu2.
  return slope_excess(config, flag) + ps.delta2 * mu2_of(config, flag);
}

bool parabolic_equivalence_oracle(int r, long d, const ParabolicStructure& ps,
                                  const std::vector<SubbundleCandidate>& candidates) {
  for (const auto& cand : candidates) {
    const Rational par = parabolic_margin(r, d, ps, cand);
    const Rational dec = decorated_margin(r, d, ps, cand);
    const int sp = par < 0 ? -1 : (par > 0 ? 1 : 0);
    const int sd = dec < 0 ? -1 : (dec > 0 ? 1 : 0);
    if (sp != sd) return false;
  }
  return true;
}

int seshadri_c(const SeshadriLevel& level, const Subspace& f_x0) {
  for (const Vec& v : f_x0.basis()) {
    for (const Vec& row : level.f) {
      Rational dot = 0;
      for (size_t j = 0; j < row.size(); ++j) dot += row[j] * v[j];
      if (dot != 0) return 1;
    }
  }
  return 0;
}

StabilityReport seshadri_stable(int r, long d, const SeshadriLevel& level,
                                const Rational& delta2,
                                const std::vector<SubbundleCandidate>& candidates) {
  const Rational deg_e =
      Rational(d) - delta2 * seshadri_c(level, Subspace::full(r));
  std::vector<std::pair<NumericFlag, Rational>> values;
  values.reserve(candidates.size());
  for (const auto& cand : candidates) {
    const Rational deg_f =
        Rational(cand.degree) - delta2 * seshadri_c(level, cand.x0);
    values.emplace_back(candidate_flag(r, cand), deg_e * cand.rank - deg_f * r);
  }
  return report_from_margins(values);
}

}  // namespace swampstab
