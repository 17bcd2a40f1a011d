#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swampstab/config.hpp"
#include "swampstab/selftest.hpp"

namespace {

using namespace swampstab;

// Deterministic ordered key-value report, rendered flat or as JSON.
class Report {
public:
  void add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
  }
  void add(const std::string& key, const Rational& value) {
    add(key, "\"" + rational_to_string(value) + "\"");
  }
  void add(const std::string& key, long value) { add(key, std::to_string(value)); }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << "{\n";
      for (size_t i = 0; i < entries_.size(); ++i)
        out << "  \"" << entries_[i].first << "\": " << entries_[i].second
            << (i + 1 < entries_.size() ? "," : "") << "\n";
      out << "}\n";
    } else {
      for (const auto& [key, value] : entries_) out << key << " = " << value << "\n";
    }
  }

private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string quoted(const Rational& q) { return "\"" + rational_to_string(q) + "\""; }

std::string int_list(const std::vector<int>& xs) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << "]";
  return out.str();
}

std::string flag_brief(const NumericFlag& flag) {
  std::ostringstream out;
  out << "\"ranks=[";
  for (size_t i = 0; i < flag.ranks.size(); ++i) out << (i ? "," : "") << flag.ranks[i];
  out << "] degrees=[";
  for (size_t i = 0; i < flag.degrees.size(); ++i)
    out << (i ? "," : "") << flag.degrees[i];
  out << "] weights=[";
  for (size_t i = 0; i < flag.weights.size(); ++i)
    out << (i ? "," : "") << rational_to_string(flag.weights[i]);
  out << "]\"";
  return out.str();
}

struct Options {
  std::string input;
  std::string delta1;
  std::string delta2;
  long n = 3;
  unsigned seed = 0;
  bool json = false;
};

Rational pick_delta(const std::string& cli_value, const std::optional<Rational>& doc_value) {
  if (!cli_value.empty()) return parse_rational(cli_value);
  if (doc_value) return *doc_value;
  return rat(1, 2);
}

const SwampConfig& need_config(const ConfigDocument& doc) {
  if (!doc.config)
    throw Error("ParseError", "document carries no swamp configuration (rho/sigma/phi/s)");
  return *doc.config;
}

std::vector<NumericFlag> candidate_flags(const ConfigDocument& doc,
                                         const SwampConfig& config, bool* exhaustive) {
  if (!doc.flags.empty()) {
    *exhaustive = false;
    return doc.flags;
  }
  if (config.split_degrees) {
    *exhaustive = true;
    return enumerate_candidates(config, config.rank - 1);
  }
  throw Error("EmptyCandidates", "no flags in the document and no split model");
}

void report_verdict(Report& report, const StabilityReport& sr) {
  report.add("verdict", "\"" + verdict_name(sr.verdict) + "\"");
  report.add("exhaustive", sr.exhaustive_candidates ? "true" : "false");
  if (sr.witness) report.add("witness", flag_brief(*sr.witness));
  for (size_t i = 0; i < sr.functional_values.size(); ++i) {
    report.add("value" + std::to_string(i + 1) + ".flag",
               flag_brief(sr.functional_values[i].first));
    report.add("value" + std::to_string(i + 1) + ".functional",
               sr.functional_values[i].second);
  }
}

int run_mu(const Options& opt) {
  const ConfigDocument doc = load_document(opt.input);
  const SwampConfig& config = need_config(doc);
  Report report;
  if (doc.flags.empty()) throw Error("EmptyCandidates", "mu needs at least one flag");
  for (size_t i = 0; i < doc.flags.size(); ++i) {
    const std::string key = "flag" + std::to_string(i + 1);
    report.add(key + ".M", slope_excess(config, doc.flags[i]));
    report.add(key + ".mu1", mu1_of(config, doc.flags[i]));
    report.add(key + ".mu2", mu2_of(config, doc.flags[i]));
  }
  report.print(std::cout, opt.json);
  return 0;
}

int run_stab(const Options& opt) {
  const ConfigDocument doc = load_document(opt.input);
  const SwampConfig& config = need_config(doc);
  const Rational delta1 = pick_delta(opt.delta1, doc.delta1);
  const Rational delta2 = pick_delta(opt.delta2, doc.delta2);
  bool exhaustive = false;
  const auto candidates = candidate_flags(doc, config, &exhaustive);
  const StabilityReport sr =
      check_stability(config, candidates, delta1, delta2, exhaustive);
  Report report;
  report.add("delta1", delta1);
  report.add("delta2", delta2);
  report_verdict(report, sr);
  report.print(std::cout, opt.json);
  return 0;
}

int run_section_stab(const Options& opt) {
  const ConfigDocument doc = load_document(opt.input);
  const SwampConfig& config = need_config(doc);
  const Rational delta1 = pick_delta(opt.delta1, doc.delta1);
  const Rational delta2 = pick_delta(opt.delta2, doc.delta2);
  bool exhaustive = false;
  const auto candidates = candidate_flags(doc, config, &exhaustive);
  Report report;
  report.add("n", opt.n);
  Verdict verdict = Verdict::stable;
  std::optional<NumericFlag> witness;
  for (size_t i = 0; i < candidates.size(); ++i) {
    const Rational value = section_functional(config, candidates[i], delta1, delta2,
                                              opt.n, !config.split_degrees);
    report.add("value" + std::to_string(i + 1) + ".flag", flag_brief(candidates[i]));
    report.add("value" + std::to_string(i + 1) + ".functional", value);
    if (value < 0 && verdict != Verdict::unstable) {
      verdict = Verdict::unstable;
      witness = candidates[i];
    } else if (value == 0 && verdict == Verdict::stable) {
      verdict = Verdict::semistable_not_stable;
      witness = candidates[i];
    }
  }
  report.add("verdict", "\"" + verdict_name(verdict) + "\"");
  if (witness) report.add("witness", flag_brief(*witness));
  report.print(std::cout, opt.json);
  return 0;
}

int run_walls(const Options& opt) {
  const ConfigDocument doc = load_document(opt.input);
  const SwampConfig& config = need_config(doc);
  const Rational delta1 = pick_delta(opt.delta1, doc.delta1);
  const Rational hi = opt.delta2.empty() ? Rational(1000000)
                                         : parse_rational(opt.delta2);
  bool exhaustive = false;
  const auto candidates = candidate_flags(doc, config, &exhaustive);
  const auto walls = delta_walls(config, candidates, delta1, Rational(0), hi);
  Report report;
  std::ostringstream list;
  list << "[";
  for (size_t i = 0; i < walls.size(); ++i) list << (i ? ", " : "") << quoted(walls[i]);
  list << "]";
  report.add("walls", list.str());
  report.print(std::cout, opt.json);
  return 0;
}

int run_df(const Options& opt) {
  const ConfigDocument doc = load_document(opt.input);
  const SwampConfig& config = need_config(doc);
  if (doc.flags.empty()) throw Error("EmptyCandidates", "df needs a flag to deform along");
  const SwampConfig deformed = admissible_deformation(config, doc.flags[0]);
  const NumericFlag image = graded_image_flag(doc.flags[0], config.rank);
  std::cout << document_to_text(deformed, {image}, doc.delta1, doc.delta2);
  return 0;
}

int run_gieseker(const Options& opt) {
  const ConfigDocument doc = load_document(opt.input);
  const SwampConfig& config = need_config(doc);
  const Rational delta1 = pick_delta(opt.delta1, doc.delta1);
  const Rational delta2 = pick_delta(opt.delta2, doc.delta2);
  bool exhaustive = false;
  const auto candidates = candidate_flags(doc, config, &exhaustive);
  const long p = config.split_degrees
                     ? h0_split(*config.split_degrees, opt.n)
                     : euler_p(opt.n, config.degree, config.rank, config.genus);
  const Linearization lin = make_linearization(p, delta1, delta2, config.rho_spec.a,
                                               config.sigma_spec.a, config.rank);
  Report report;
  report.add("n", opt.n);
  report.add("p", p);
  report.add("z", lin.z);
  report.add("eta", lin.eta.get_str());
  report.add("theta1", lin.theta1.get_str());
  report.add("theta2", lin.theta2.get_str());
  for (size_t i = 0; i < candidates.size(); ++i) {
    const NumericFlag& flag = candidates[i];
    std::vector<long> h0_steps;
    for (int j = 0; j < flag.length(); ++j)
      h0_steps.push_back(flag.degrees[j] +
                         flag.ranks[j] * (opt.n + 1 - config.genus));
    const SectionFlag yflag = transport_gamma(flag, h0_steps, p);
    const Rational wm = gies_weight_quot(yflag, config.rank);
    const WeightedFlag gen = flag.generic_flag(config.rank);
    const WeightedFlag x0 = flag.x0_flag(config.rank);
    const Rational wt1 =
        config.rho_spec.a == 0
            ? Rational(0)
            : gies_weight_tensor(
                  yflag,
                  [&](const IndexTuple& t) {
                    return support_nonzero(config.phi, gen, t);
                  },
                  config.rho_spec.a);
    const Rational wt2 =
        config.sigma_spec.a == 0
            ? Rational(0)
            : gies_weight_tensor(
                  yflag,
                  [&](const IndexTuple& t) { return support_nonzero(config.s, x0, t); },
                  config.sigma_spec.a);
    const std::string key = "flag" + std::to_string(i + 1);
    report.add(key + ".wM", wm);
    report.add(key + ".wT1", wt1);
    report.add(key + ".wT2", wt2);
    report.add(key + ".total", total_gies_weight(lin, wm, wt1, wt2));
  }
  report.print(std::cout, opt.json);
  return 0;
}

int run_parabolic(const Options& opt) {
  const ConfigDocument doc = load_document(opt.input);
  if (!doc.parabolic) throw Error("ParseError", "document has no parabolic block");
  const ParabolicBlock& block = *doc.parabolic;
  Report report;
  report.add("flag_type", int_list(block.structure.flag_type));
  report.add("admissible", block.structure.admissible() ? "true" : "false");
  report.add("pardeg_E",
             pardeg(doc.degree, Subspace::full(doc.rank), block.structure));
  if (block.candidates.empty()) throw Error("EmptyCandidates", "no candidates supplied");
  const StabilityReport sr =
      parabolic_stable(doc.rank, doc.degree, block.structure, block.candidates);
  report_verdict(report, sr);
  if (block.structure.admissible()) {
    const bool agree = parabolic_equivalence_oracle(doc.rank, doc.degree,
                                                    block.structure, block.candidates);
    report.add("decorated_equivalence", agree ? "true" : "false");
  } else {
    report.add("decorated_equivalence", "\"skipped\"");
  }
  report.print(std::cout, opt.json);
  return 0;
}

int run_level(const Options& opt) {
  const ConfigDocument doc = load_document(opt.input);
  if (!doc.level) throw Error("ParseError", "document has no level block");
  const LevelBlock& block = *doc.level;
  Report report;
  const CompletedHom point = reconstruct_completed_hom(block.dec);
  const std::vector<int> stratum = omega_check(point);
  report.add("stratum", int_list(stratum));
  if (block.candidates.empty()) throw Error("EmptyCandidates", "no candidates supplied");
  const StabilityReport sr =
      level_stable(doc.rank, doc.degree, block.dec.w, stratum, block.delta2,
                   block.theta, block.candidates);
  report_verdict(report, sr);
  for (size_t i = 0; i < block.candidates.size(); ++i) {
    const auto& cand = block.candidates[i];
    const auto [lhs, rhs] = lemma_identity_check(cand.x0, cand.rank, block.dec.w,
                                                 stratum, block.theta, doc.rank);
    const std::string key = "candidate" + std::to_string(i + 1);
    report.add(key + ".lemma_lhs", lhs);
    report.add(key + ".lemma_rhs", rhs);
    report.add(key + ".lemma_equal", lhs == rhs ? "true" : "false");
    const bool ngo =
        ngo_dac_condition(cand.degree, cand.rank, cand.x0, doc.degree, doc.rank,
                          block.delta2, block.theta, stratum, block.dec.w);
    report.add(key + ".ngo_dac", ngo ? "true" : "false");
  }
  report.print(std::cout, opt.json);
  return 0;
}

int run_selftest(const Options& opt) {
  const auto results = sweeps::run_all(opt.seed);
  Report report;
  bool all_ok = true;
  for (const auto& r : results) {
    if (r.ok) {
      report.add("sweep." + r.name,
                 "\"ok (" + std::to_string(r.instances) + " instances)\"");
    } else {
      all_ok = false;
      report.add("sweep." + r.name, "\"FAIL at instance " +
                                        std::to_string(r.instances) + ": " + r.detail +
                                        "\"");
    }
  }
  report.add("selftest", all_ok ? "\"ok\"" : "\"fail\"");
  report.print(std::cout, opt.json);
  return all_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stability computations for decorated vector bundles"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::string> names = {"mu",       "stab",      "section-stab",
                                          "walls",    "df",        "gieseker",
                                          "parabolic", "level",    "selftest"};
  for (const std::string& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", opt.input, "input document path");
    sub->add_option("--delta1", opt.delta1, "delta1 as p/q");
    sub->add_option("--delta2", opt.delta2, "delta2 as p/q");
    sub->add_option("--n", opt.n, "twist parameter n");
    sub->add_option("--seed", opt.seed, "random seed for sweeps");
    sub->add_flag("--json", opt.json, "emit a JSON object");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    if (sub != "selftest" && opt.input.empty())
      throw Error("ParseError", "--input is required");
    if (sub == "mu") return run_mu(opt);
    if (sub == "stab") return run_stab(opt);
    if (sub == "section-stab") return run_section_stab(opt);
    if (sub == "walls") return run_walls(opt);
    if (sub == "df") return run_df(opt);
    if (sub == "gieseker") return run_gieseker(opt);
    if (sub == "parabolic") return run_parabolic(opt);
    if (sub == "level") return run_level(opt);
    if (sub == "selftest") return run_selftest(opt);
    std::cerr << "error = ParseError: unknown subcommand\n";
    return 2;
  } catch (const swampstab::Error& e) {
    std::cerr << "error = " << e.what() << "\n";
    return e.code() == "ParseError" ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error = InternalError: " << e.what() << "\n";
    return 3;
  }
}
