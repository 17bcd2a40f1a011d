#include "swampstab/selftest.hpp"

#include <algorithm>
#include <sstream>

namespace swampstab::sweeps {

long rnd(std::mt19937& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Rational rnd_rational(std::mt19937& rng, bool allow_zero) {
  long num = rnd(rng, -3, 3);
  while (!allow_zero && num == 0) num = rnd(rng, -3, 3);
  return rat(num, rnd(rng, 1, 3));
}

Rational rnd_positive_rational(std::mt19937& rng) {
  return rat(rnd(rng, 1, 3), rnd(rng, 1, 3));
}

Mat rnd_invertible(std::mt19937& rng, int n) {
  while (true) {
    Mat m(n, Vec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = Rational(rnd(rng, -2, 2));
    if (determinant(m) != 0) return m;
  }
}

WeightedFlag rnd_weighted_flag(std::mt19937& rng, int n, bool allow_trivial) {
  while (true) {
    std::vector<int> dims;
    for (int d = 1; d < n; ++d)
      if (rng() % 2 == 0) dims.push_back(d);
    if (dims.empty() && !allow_trivial) continue;
    const Mat basis = rnd_invertible(rng, n);
    std::vector<Subspace> subspaces;
    std::vector<Rational> weights;
    for (int d : dims) {
      subspaces.push_back(Subspace::span(n, Mat(basis.begin(), basis.begin() + d)));
      weights.push_back(rnd_positive_rational(rng));
    }
    return make_weighted_flag(n, subspaces, weights);
  }
}

DecorationForm rnd_form(std::mt19937& rng, const TensorRepSpec& spec) {
  DecorationForm form;
  form.spec = spec;
  const long entries = rnd(rng, 1, 3);
  for (long e = 0; e < entries; ++e) {
    const int copy = static_cast<int>(rnd(rng, 1, spec.b));
    std::vector<int> index(spec.a);
    for (int& i : index) i = static_cast<int>(rnd(rng, 1, spec.base_dim));
    form.set(copy, index, rnd_rational(rng, false));
  }
  return form;
}

namespace {

std::string show(const Rational& q) { return rational_to_string(q); }

SweepResult fail_at(const std::string& name, long instance, const std::string& what) {
  SweepResult r;
  r.name = name;
  r.instances = instance;
  r.ok = false;
  r.detail = what;
  return r;
}

SweepResult pass(const std::string& name, long instances) {
  SweepResult r;
  r.name = name;
  r.instances = instances;
  return r;
}

std::vector<int> unit_coords(const Subspace& s) {
  std::vector<int> coords;
  for (const auto& row : s.basis())
    for (int c = 0; c < s.ambient_dim(); ++c)
      if (row[c] != 0) {
        coords.push_back(c + 1);
        break;
      }
  return coords;
}

// Random split-model swamp with sparse random decorations.
SwampConfig rnd_split_config(std::mt19937& rng, int r, bool balanced = false) {
  SwampConfig config;
  config.rank = r;
  config.genus = 0;
  std::vector<long> degs(r);
  if (balanced) {
    const long e = rnd(rng, -1, 1);
    for (long& d : degs) d = e;
  } else {
    for (long& d : degs) d = rnd(rng, -1, 2);
  }
  config.split_degrees = degs;
  config.degree = 0;
  for (long d : degs) config.degree += d;
  config.line_degree = rnd(rng, -2, 2);
  config.rho_spec = TensorRepSpec{static_cast<int>(rnd(rng, 0, 2)),
                                  static_cast<int>(rnd(rng, 1, 2)), 0, r};
  config.sigma_spec = TensorRepSpec{static_cast<int>(rnd(rng, 0, 2)),
                                    static_cast<int>(rnd(rng, 1, 2)), 0, r};
  config.phi = rnd_form(rng, config.rho_spec);
  config.s = rnd_form(rng, config.sigma_spec);
  return config;
}

CompletedHomDecomposition rnd_dec(std::mt19937& rng, int r) {
  CompletedHomDecomposition dec;
  dec.r = r;
  for (int j = 1; j < r; ++j)
    if (rng() % 2 == 0) dec.stratum.push_back(j);
  dec.stratum.push_back(r);
  const Mat src = rnd_invertible(rng, r);
  const Mat tgt = rnd_invertible(rng, r);
  const int k = static_cast<int>(dec.stratum.size()) - 1;
  for (int j = 1; j <= k; ++j) {
    const int rj = dec.stratum[j - 1];
    dec.w.push_back(Subspace::span(r, Mat(src.begin() + rj, src.end())));
    dec.wprime.push_back(Subspace::span(r, Mat(tgt.begin(), tgt.begin() + rj)));
  }
  for (int j = 1; j < r; ++j) {
    const bool in_stratum =
        std::find(dec.stratum.begin(), dec.stratum.end(), j) != dec.stratum.end();
    dec.l.push_back(in_stratum ? Rational(0) : rnd_rational(rng, false));
  }
  int prev = 0;
  for (int s : dec.stratum) {
    dec.v.push_back(rnd_invertible(rng, s - prev));
    prev = s;
  }
  return dec;
}

std::vector<Subspace> rnd_descending_chain(std::mt19937& rng, int r,
                                           const std::vector<int>& stratum) {
  const Mat basis = rnd_invertible(rng, r);
  std::vector<Subspace> w;
  for (size_t j = 0; j + 1 < stratum.size(); ++j)
    w.push_back(Subspace::span(r, Mat(basis.begin() + stratum[j], basis.end())));
  return w;
}

}  // namespace

SweepResult mu_oracle_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  for (long i = 0; i < instances; ++i) {
    const int n = static_cast<int>(rnd(rng, 2, 3));
    TensorRepSpec spec{static_cast<int>(rnd(rng, 0, 3)),
                       static_cast<int>(rnd(rng, 1, 2)),
                       static_cast<int>(rnd(rng, 0, 1)), n};
    const WeightedFlag flag = rnd_weighted_flag(rng, n);
    const DecorationForm form = rnd_form(rng, spec);
    const Rational fast = mu_tensor(flag, form);
    const Rational slow = mu_bruteforce_oracle(flag, form);
    if (fast != slow)
      return fail_at("mu-oracle", i, "mu_tensor=" + show(fast) +
                                         " oracle=" + show(slow));
  }
  return pass("mu-oracle", instances);
}

SweepResult gamma_roundtrip_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  for (long i = 0; i < instances; ++i) {
    const int n = static_cast<int>(rnd(rng, 2, 5));
    const WeightedFlag flag = rnd_weighted_flag(rng, n);
    const WeightVector gamma = gamma_from_flag(flag);
    Rational trace = 0;
    for (int s = 0; s < gamma.stages(); ++s)
      trace += gamma.values[s] * gamma.multiplicities[s];
    if (trace != 0) return fail_at("gamma-roundtrip", i, "trace " + show(trace));
    const AdaptedBasis adapted = adapted_basis(flag);
    std::vector<Subspace> eigenspaces;
    for (int s = 1; s <= gamma.stages(); ++s) {
      Mat rows;
      for (size_t p = 0; p < adapted.rows.size(); ++p)
        if (adapted.stage[p] == s) rows.push_back(adapted.rows[p]);
      eigenspaces.push_back(Subspace::span(n, rows));
    }
    const WeightedFlag back = flag_from_gamma(gamma, eigenspaces);
    if (back.subspaces != flag.subspaces || back.weights != flag.weights)
      return fail_at("gamma-roundtrip", i, "flag_from_gamma mismatch");
  }
  return pass("gamma-roundtrip", instances);
}

SweepResult estimate_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  for (long i = 0; i < instances; ++i) {
    // Weight-shift bound for mu on V_{a,b,c}.
    const int n = static_cast<int>(rnd(rng, 2, 3));
    TensorRepSpec spec{static_cast<int>(rnd(rng, 1, 3)),
                       static_cast<int>(rnd(rng, 1, 2)), 0, n};
    const WeightedFlag flag = rnd_weighted_flag(rng, n);
    const DecorationForm form = rnd_form(rng, spec);
    WeightedFlag shifted = flag;
    Rational beta_mass = 0;
    for (int j = 0; j < flag.length(); ++j) {
      const Rational beta = rnd_positive_rational(rng);
      shifted.weights[j] += beta;
      beta_mass += beta * flag.subspaces[j].dim();
    }
    if (mu_tensor(shifted, form) < mu_tensor(flag, form) - spec.a * beta_mass)
      return fail_at("estimates", i, "weight-shift bound violated");

    // Two-sided bound for the Gieseker tensor weight.
    SectionFlag yflag;
    yflag.total_dim = static_cast<int>(rnd(rng, 4, 8));
    for (int d = 1; d < yflag.total_dim; ++d)
      if (rng() % 3 == 0) {
        yflag.dims.push_back(d);
        yflag.weights.push_back(rnd_positive_rational(rng));
        yflag.gen_ranks.push_back(0);
      }
    const int a2 = static_cast<int>(rnd(rng, 1, 2));
    IndexTuple base(a2);
    for (int& t : base) t = static_cast<int>(rnd(rng, 1, yflag.length() + 1));
    const auto support = [&base](const IndexTuple& t) {
      for (size_t p = 0; p < t.size(); ++p)
        if (t[p] < base[p]) return false;
      return true;
    };
    const Rational value = gies_weight_tensor(yflag, support, a2);
    Rational mass = 0, comass = 0;
    for (int j = 0; j < yflag.length(); ++j) {
      mass += yflag.weights[j] * yflag.dims[j];
      comass += yflag.weights[j] * (yflag.total_dim - yflag.dims[j]);
    }
    if (value < -a2 * mass || value > a2 * comass)
      return fail_at("estimates", i, "tensor weight bound violated: " + show(value));
  }
  return pass("estimates", instances);
}

SweepResult parabolic_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  for (long i = 0; i < instances; ++i) {
    const int r = static_cast<int>(rnd(rng, 2, 3));
    ParabolicStructure ps;
    for (int j = 1; j < r; ++j)
      if (rng() % 2 == 0) ps.flag_type.push_back(j);
    if (ps.flag_type.empty()) ps.flag_type.push_back(static_cast<int>(rnd(rng, 1, r - 1)));
    const Mat basis = rnd_invertible(rng, r);
    int beta_sum = 0;
    for (int rj : ps.flag_type) {
      ps.x0_flag.push_back(Subspace::span(r, Mat(basis.begin(), basis.begin() + rj)));
      ps.beta.push_back(static_cast<int>(rnd(rng, 1, 2)));
      beta_sum += ps.beta.back();
    }
    ps.delta2 = rat(1, beta_sum + rnd(rng, 1, 3));
    if (!ps.admissible()) return fail_at("parabolic", i, "inadmissible weights");
    const long d = rnd(rng, -2, 2);
    std::vector<SubbundleCandidate> candidates;
    for (int c = 0; c < 4; ++c) {
      SubbundleCandidate cand;
      cand.rank = static_cast<int>(rnd(rng, 1, r - 1));
      cand.degree = rnd(rng, -2, 2);
      if (c % 2 == 0) {
        std::vector<int> coords;
        while (static_cast<int>(coords.size()) < cand.rank) {
          const int pick = static_cast<int>(rnd(rng, 1, r));
          if (std::find(coords.begin(), coords.end(), pick) == coords.end())
            coords.push_back(pick);
        }
        cand.x0 = Subspace::coordinate(r, coords);
      } else {
        const Mat m = rnd_invertible(rng, r);
        cand.x0 = Subspace::span(r, Mat(m.begin(), m.begin() + cand.rank));
      }
      candidates.push_back(cand);
    }
    if (!parabolic_equivalence_oracle(r, d, ps, candidates))
      return fail_at("parabolic", i, "decorated and parabolic signs differ");
  }
  return pass("parabolic", instances);
}

SweepResult level_lemma_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  for (long i = 0; i < instances; ++i) {
    const int r = static_cast<int>(rnd(rng, 2, 4));
    std::vector<int> stratum;
    for (int j = 1; j < r; ++j)
      if (rng() % 2 == 0) stratum.push_back(j);
    stratum.push_back(r);
    const auto w = rnd_descending_chain(rng, r, stratum);
    std::vector<Rational> theta;
    for (int j = 0; j < r; ++j) theta.push_back(Rational(rnd(rng, 1, 3)));
    const int f_rank = static_cast<int>(rnd(rng, 1, r));
    const Mat m = rnd_invertible(rng, r);
    const Subspace f_x0 = Subspace::span(r, Mat(m.begin(), m.begin() + f_rank));
    const auto [lhs, rhs] = lemma_identity_check(f_x0, f_rank, w, stratum, theta, r);
    if (lhs != rhs)
      return fail_at("level-lemma", i, "lhs=" + show(lhs) + " rhs=" + show(rhs));
    std::vector<Rational> theta_q;
    for (int j = 0; j < r; ++j) theta_q.push_back(rnd_positive_rational(rng));
    if (q_poly(0, theta_q, r) != 0 || q_poly(r, theta_q, r) != 0)
      return fail_at("level-lemma", i, "q endpoints nonzero");
  }
  return pass("level-lemma", instances);
}

SweepResult level_mu_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  for (long i = 0; i < instances; ++i) {
    const int r = static_cast<int>(rnd(rng, 2, 3));
    const CompletedHomDecomposition dec = rnd_dec(rng, r);
    for (int idx = 1; idx <= r; ++idx) {
      const DecorationForm form = h_i_form(dec, idx);
      const WeightedFlag flag = rnd_weighted_flag(rng, r);
      const Rational via_tensor = mu_tensor(flag, form);
      const Rational via_c = mu_level_oracle(flag, dec.w, dec.stratum, idx, r);
      if (via_tensor != via_c)
        return fail_at("level-mu", i, "i=" + std::to_string(idx) + " tensor=" +
                                          show(via_tensor) + " c=" + show(via_c));
    }
  }
  return pass("level-mu", instances);
}

SweepResult level_ngo_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  for (long i = 0; i < instances; ++i) {
    const int r = static_cast<int>(rnd(rng, 2, 4));
    std::vector<int> stratum;
    for (int j = 1; j < r; ++j)
      if (rng() % 2 == 0) stratum.push_back(j);
    stratum.push_back(r);
    const auto w = rnd_descending_chain(rng, r, stratum);
    std::vector<Rational> theta;
    for (int j = 0; j < r; ++j) theta.push_back(Rational(rnd(rng, 1, 3)));
    const Rational delta2 = rnd_positive_rational(rng);
    const long d = rnd(rng, -3, 3);
    for (int c = 0; c < 3; ++c) {
      SubbundleCandidate cand;
      cand.rank = static_cast<int>(rnd(rng, 1, r - 1));
      cand.degree = rnd(rng, -3, 3);
      const Mat m = rnd_invertible(rng, r);
      cand.x0 = Subspace::span(r, Mat(m.begin(), m.begin() + cand.rank));
      const Rational deg_e =
          level_degree(d, Subspace::full(r), w, stratum, delta2, theta, r);
      const Rational deg_f =
          level_degree(cand.degree, cand.x0, w, stratum, delta2, theta, r);
      const bool margin_ok = deg_e * cand.rank - deg_f * r >= 0;
      const bool ngo = ngo_dac_condition(cand.degree, cand.rank, cand.x0, d, r,
                                         delta2, theta, stratum, w);
      if (margin_ok != ngo)
        return fail_at("level-ngo", i, "level_stable and corollary disagree");
    }
  }
  return pass("level-ngo", instances);
}

SweepResult omega_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  for (long i = 0; i < instances; ++i) {
    const int r = static_cast<int>(rnd(rng, 2, 3));
    const CompletedHomDecomposition dec = rnd_dec(rng, r);
    const CompletedHom point = reconstruct_completed_hom(dec);
    if (omega_check(point) != dec.stratum)
      return fail_at("omega", i, "reconstructed point fails omega_check");
    std::vector<Rational> z;
    for (int j = 0; j < r; ++j) z.push_back(rnd_rational(rng, false));
    const CompletedHom acted = torus_act(z, point);
    if (omega_check(acted) != dec.stratum)
      return fail_at("omega", i, "torus action changed the stratum");
    const CompletedHom fixed = torus_act(std::vector<Rational>(r, Rational(1)), point);
    if (fixed.f != point.f || fixed.l != point.l)
      return fail_at("omega", i, "identity torus element moved the point");
    const ExtractedFlags flags = decompose_completed_hom(point);
    if (flags.stratum != dec.stratum || flags.w != dec.w ||
        flags.wprime != dec.wprime)
      return fail_at("omega", i, "flag extraction does not invert reconstruction");
  }
  return pass("omega", instances);
}

SweepResult deformation_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  for (long i = 0; i < instances; ++i) {
    const int r = static_cast<int>(rnd(rng, 2, 3));
    const SwampConfig config = rnd_split_config(rng, r);
    const auto candidates = enumerate_candidates(config, r - 1);
    const NumericFlag& flag = candidates[rnd(rng, 0, candidates.size() - 1)];
    const SwampConfig deformed = admissible_deformation(config, flag);
    const NumericFlag image = graded_image_flag(flag, r);
    if (mu1_of(config, flag) != mu1_of(deformed, image) ||
        mu2_of(config, flag) != mu2_of(deformed, image))
      return fail_at("deformation", i, "mu changed under deformation");
    const SwampConfig twice = admissible_deformation(deformed, image);
    if (twice.phi.coeffs != deformed.phi.coeffs || twice.s.coeffs != deformed.s.coeffs)
      return fail_at("deformation", i, "deformation is not idempotent");
    // Weight homogeneity of the graded decorations along the image flag.
    const auto homogeneous = [&](const DecorationForm& form,
                                 const WeightedFlag& wflag) {
      const WeightVector gamma = gamma_from_flag(wflag);
      auto stage_of = [&](int coord) {
        for (int t = 0; t < wflag.length(); ++t)
          if (coord <= wflag.subspaces[t].dim()) return t;
        return wflag.length();
      };
      bool first = true;
      Rational w0 = 0;
      for (const auto& [key, value] : form.coeffs) {
        Rational w = 0;
        for (size_t p = 1; p < key.size(); ++p) w += gamma.values[stage_of(key[p])];
        if (first) {
          w0 = w;
          first = false;
        } else if (w != w0) {
          return false;
        }
      }
      return true;
    };
    if (!homogeneous(deformed.phi, image.generic_flag(r)) ||
        !homogeneous(deformed.s, image.x0_flag(r)))
      return fail_at("deformation", i, "graded decoration is not weight-homogeneous");
  }
  return pass("deformation", instances);
}

SweepResult gieseker_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  for (long i = 0; i < instances; ++i) {
    const int r = static_cast<int>(rnd(rng, 2, 3));
    SwampConfig config = rnd_split_config(rng, r);
    if (config.sigma_spec.a == 0) {
      config.sigma_spec.a = 1;
      config.s = rnd_form(rng, config.sigma_spec);
    }
    const int a1 = config.rho_spec.a, a2 = config.sigma_spec.a;
    const Rational delta1 = rnd_positive_rational(rng);
    const Rational delta2 = rat(1, a2 + 1);  // delta2 a2 < 1
    long min_deg = 0;
    for (long dgr : *config.split_degrees) min_deg = std::min(min_deg, dgr);
    const long n = 3 - min_deg;
    const long p = euler_p(n, config.degree, r, 0);
    const Linearization lin = make_linearization(p, delta1, delta2, a1, a2, r);

    for (const NumericFlag& flag : enumerate_candidates(config, r - 1)) {
      std::vector<long> h0_steps;
      for (int j = 0; j < flag.length(); ++j)
        h0_steps.push_back(flag.degrees[j] + flag.ranks[j] * (n + 1));
      const SectionFlag yflag = transport_gamma(flag, h0_steps, p);
      if (yflag.length() != flag.length())
        return fail_at("gieseker", i, "section flag lost steps");
      const Rational wm = gies_weight_quot(yflag, r);
      const WeightedFlag gen = flag.generic_flag(r);
      const WeightedFlag x0 = flag.x0_flag(r);
      const Rational wt1 =
          a1 == 0 ? Rational(0)
                  : gies_weight_tensor(
                        yflag,
                        [&](const IndexTuple& t) {
                          return support_nonzero(config.phi, gen, t);
                        },
                        a1);
      const Rational wt2 = gies_weight_tensor(
          yflag,
          [&](const IndexTuple& t) { return support_nonzero(config.s, x0, t); },
          a2);
      const Rational total = total_gies_weight(lin, wm, wt1, wt2);
      const Rational scaled = total / (Rational(lin.z) * p);
      const Rational section = section_functional(config, flag, delta1, delta2, n);
      if (scaled != section)
        return fail_at("gieseker", i, "gies=" + show(scaled) +
                                          " section=" + show(section));

      // Critical-flag correspondence round trip.
      std::vector<GeneratedStep> generated;
      for (int j = 0; j < flag.length(); ++j) {
        GeneratedStep g;
        g.rank = flag.ranks[j];
        g.degree = flag.degrees[j];
        g.h1_zero = true;
        g.coords = unit_coords(flag.generic_chain[j]);
        generated.push_back(g);
      }
      const NumericFlag back = transport_q(yflag, generated, r);
      if (back.ranks != flag.ranks || back.degrees != flag.degrees ||
          back.weights != flag.weights)
        return fail_at("gieseker", i, "transport round trip changed the flag");
      const SectionFlag again = transport_gamma(back, h0_steps, p);
      if (again.dims != yflag.dims || again.weights != yflag.weights)
        return fail_at("gieseker", i, "section transport round trip mismatch");
    }
  }
  return pass("gieseker", instances);
}

SweepResult slope_bound_sweep(unsigned seed, long instances) {
  std::mt19937 rng(seed);
  long found = 0;
  for (long attempt = 0; attempt < 80 * instances && found < instances; ++attempt) {
    const int r = static_cast<int>(rnd(rng, 2, 3));
    const SwampConfig config = rnd_split_config(rng, r, attempt % 2 == 0);
    const Rational delta1 = rat(1, rnd(rng, 2, 4));
    const Rational delta2 = rat(1, rnd(rng, 2, 4));
    const auto candidates = enumerate_candidates(config, r - 1);
    const StabilityReport report =
        check_stability(config, candidates, delta1, delta2, true);
    if (report.verdict == Verdict::unstable) continue;
    ++found;
    const Rational bound =
        Rational(config.degree) / r +
        slope_bound_C(delta1, delta2, config.rho_spec.a, config.sigma_spec.a, r);
    for (const NumericFlag& flag : candidates) {
      if (flag.length() != 1) continue;
      if (Rational(flag.degrees[0]) / flag.ranks[0] > bound)
        return fail_at("slope-bound", found, "semistable config violates the bound");
    }
  }
  if (found < instances)
    return fail_at("slope-bound", found, "too few semistable instances found");
  return pass("slope-bound", found);
}

std::vector<SweepResult> run_all(unsigned seed, int scale) {
  std::vector<SweepResult> out;
  out.push_back(mu_oracle_sweep(seed, 120L * scale));
  out.push_back(gamma_roundtrip_sweep(seed + 1, 200L * scale));
  out.push_back(estimate_sweep(seed + 2, 100L * scale));
  out.push_back(parabolic_sweep(seed + 3, 40L * scale));
  out.push_back(level_lemma_sweep(seed + 4, 60L * scale));
  out.push_back(level_mu_sweep(seed + 5, 12L * scale));
  out.push_back(level_ngo_sweep(seed + 6, 60L * scale));
  out.push_back(omega_sweep(seed + 7, 40L * scale));
  out.push_back(deformation_sweep(seed + 8, 40L * scale));
  out.push_back(gieseker_sweep(seed + 9, 10L * scale));
  out.push_back(slope_bound_sweep(seed + 10, 10L * scale));
  return out;
}

}  // namespace swampstab::sweeps
