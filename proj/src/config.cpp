#include "swampstab/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace swampstab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw Error("ParseError", message);
}

void reject_floats(const json& node) {
  if (node.is_number_float()) fail("floating point values are rejected");
  if (node.is_object())
    for (const auto& [key, value] : node.items()) reject_floats(value);
  if (node.is_array())
    for (const auto& value : node) reject_floats(value);
}

long get_int(const json& node, const std::string& key, long fallback,
             bool required = false) {
  if (!node.contains(key)) {
    if (required) fail("missing field: " + key);
    return fallback;
  }
  if (!node[key].is_number_integer()) fail("field must be an integer: " + key);
  return node[key].get<long>();
}

Rational get_rational(const json& node) {
  if (node.is_number_integer()) return Rational(node.get<long>());
  if (node.is_string()) return parse_rational(node.get<std::string>());
  fail("rational values must be integers or \"p/q\" strings");
}

std::vector<Rational> get_rational_list(const json& node) {
  if (!node.is_array()) fail("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& value : node) out.push_back(get_rational(value));
  return out;
}

std::vector<int> get_int_list(const json& node) {
  if (!node.is_array()) fail("expected an array of integers");
  std::vector<int> out;
  for (const auto& value : node) {
    if (!value.is_number_integer()) fail("expected an integer entry");
    out.push_back(value.get<int>());
  }
  return out;
}

Mat get_matrix(const json& node) {
  if (!node.is_array()) fail("expected an array of row vectors");
  Mat out;
  for (const auto& row : node) out.push_back(get_rational_list(row));
  return out;
}

Subspace get_subspace(const json& node, int ambient_dim) {
  return Subspace::span(ambient_dim, get_matrix(node));
}

TensorRepSpec get_spec(const json& node, int rank) {
  TensorRepSpec spec;
  spec.a = static_cast<int>(get_int(node, "a", 0, true));
  spec.b = static_cast<int>(get_int(node, "b", 1));
  spec.c = static_cast<int>(get_int(node, "c", 0));
  spec.base_dim = rank;
  return spec;
}

DecorationForm get_form(const json& node, const TensorRepSpec& spec) {
  DecorationForm form;
  form.spec = spec;
  if (!node.is_array()) fail("decoration must be an array of coefficient entries");
  for (const auto& entry : node) {
    const int copy = static_cast<int>(get_int(entry, "copy", 1));
    std::vector<int> index;
    if (entry.contains("index")) index = get_int_list(entry["index"]);
    if (!entry.contains("value")) fail("coefficient entry needs a value");
    form.set(copy, index, get_rational(entry["value"]));
  }
  return form;
}

std::vector<Subspace> default_chain(int rank, const std::vector<int>& ranks) {
  std::vector<Subspace> out;
  for (int r_j : ranks) {
    std::vector<int> coords(r_j);
    for (int i = 0; i < r_j; ++i) coords[i] = i + 1;
    out.push_back(Subspace::coordinate(rank, coords));
  }
  return out;
}

std::vector<Subspace> get_chain(const json& node, int rank) {
  if (!node.is_array()) fail("expected an array of subspaces");
  std::vector<Subspace> out;
  for (const auto& sub : node) out.push_back(get_subspace(sub, rank));
  return out;
}

NumericFlag get_flag(const json& node, int rank) {
  NumericFlag flag;
  if (!node.contains("ranks")) fail("flag needs a ranks field");
  flag.ranks = get_int_list(node["ranks"]);
  if (node.contains("degrees"))
    for (int d : get_int_list(node["degrees"])) flag.degrees.push_back(d);
  else
    flag.degrees.assign(flag.ranks.size(), 0);
  if (node.contains("weights"))
    flag.weights = get_rational_list(node["weights"]);
  else
    flag.weights.assign(flag.ranks.size(), Rational(1));
  if (node.contains("generic"))
    flag.generic_chain = get_chain(node["generic"], rank);
  else
    flag.generic_chain = default_chain(rank, flag.ranks);
  if (node.contains("x0"))
    flag.x0_chain = get_chain(node["x0"], rank);
  else
    flag.x0_chain = flag.generic_chain;
  return flag;
}

std::vector<SubbundleCandidate> get_candidates(const json& node, int rank) {
  if (!node.is_array()) fail("candidates must be an array");
  std::vector<SubbundleCandidate> out;
  for (const auto& entry : node) {
    SubbundleCandidate cand;
    cand.rank = static_cast<int>(get_int(entry, "rank", 0, true));
    cand.degree = get_int(entry, "degree", 0, true);
    if (!entry.contains("x0")) fail("candidate needs an x0 subspace");
    cand.x0 = get_subspace(entry["x0"], rank);
    out.push_back(cand);
  }
  return out;
}

json rational_json(const Rational& q) { return rational_to_string(q); }

json matrix_json(const Mat& m) {
  json out = json::array();
  for (const Vec& row : m) {
    json jr = json::array();
    for (const Rational& x : row) jr.push_back(rational_json(x));
    out.push_back(jr);
  }
  return out;
}

json form_json(const DecorationForm& form) {
  json out = json::array();
  for (const auto& [key, value] : form.coeffs) {
    json entry;
    entry["copy"] = key[0];
    entry["index"] = std::vector<int>(key.begin() + 1, key.end());
    entry["value"] = rational_json(value);
    out.push_back(entry);
  }
  return out;
}

}  // namespace

ConfigDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid document: ") + e.what());
  }
  reject_floats(doc);
  if (!doc.is_object()) fail("document must be an object");

  ConfigDocument out;
  out.rank = static_cast<int>(get_int(doc, "rank", 0, true));
  if (out.rank <= 0) fail("rank must be positive");
  out.degree = get_int(doc, "degree", 0);
  out.line_degree = get_int(doc, "line_degree", 0);
  out.genus = static_cast<int>(get_int(doc, "genus", 0));
  if (doc.contains("delta1")) out.delta1 = get_rational(doc["delta1"]);
  if (doc.contains("delta2")) out.delta2 = get_rational(doc["delta2"]);

  if (doc.contains("rho") && doc.contains("sigma")) {
    SwampConfig config;
    config.rank = out.rank;
    config.degree = out.degree;
    config.line_degree = out.line_degree;
    config.genus = out.genus;
    config.rho_spec = get_spec(doc["rho"], out.rank);
    config.sigma_spec = get_spec(doc["sigma"], out.rank);
    if (!doc.contains("phi") || !doc.contains("s"))
      fail("a swamp document needs phi and s decorations");
    config.phi = get_form(doc["phi"], config.rho_spec);
    config.s = get_form(doc["s"], config.sigma_spec);
    if (doc.contains("split_degrees")) {
      std::vector<long> degs;
      for (int d : get_int_list(doc["split_degrees"])) degs.push_back(d);
      config.split_degrees = degs;
    }
    config.validate();
    out.config = config;
  }

  if (doc.contains("flags")) {
    if (!doc["flags"].is_array()) fail("flags must be an array");
    for (const auto& f : doc["flags"]) out.flags.push_back(get_flag(f, out.rank));
  }

  if (doc.contains("parabolic")) {
    const json& p = doc["parabolic"];
    ParabolicBlock block;
    block.structure.flag_type = get_int_list(p.at("flag_type"));
    block.structure.beta = get_int_list(p.at("beta"));
    block.structure.delta2 =
        p.contains("delta2") ? get_rational(p["delta2"])
                             : out.delta2.value_or(Rational(1, 2));
    if (p.contains("x0_flag"))
      block.structure.x0_flag = get_chain(p["x0_flag"], out.rank);
    else
      block.structure.x0_flag = default_chain(out.rank, block.structure.flag_type);
    if (p.contains("candidates"))
      block.candidates = get_candidates(p["candidates"], out.rank);
    out.parabolic = block;
  }

  if (doc.contains("level")) {
    const json& lv = doc["level"];
    LevelBlock block;
    block.dec.r = out.rank;
    block.dec.stratum = get_int_list(lv.at("stratum"));
    block.dec.l = get_rational_list(lv.at("l"));
    if (lv.contains("w")) block.dec.w = get_chain(lv["w"], out.rank);
    if (lv.contains("wprime")) block.dec.wprime = get_chain(lv["wprime"], out.rank);
    if (lv.contains("v")) {
      if (!lv["v"].is_array()) fail("v must be an array of matrices");
      for (const auto& m : lv["v"]) block.dec.v.push_back(get_matrix(m));
    }
    block.theta = get_rational_list(lv.at("theta"));
    block.delta2 = lv.contains("delta2") ? get_rational(lv["delta2"])
                                         : out.delta2.value_or(Rational(1, 2));
    if (lv.contains("candidates"))
      block.candidates = get_candidates(lv["candidates"], out.rank);
    out.level = block;
  }

  return out;
}

ConfigDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read input file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string document_to_text(const SwampConfig& config,
                             const std::vector<NumericFlag>& flags,
                             const std::optional<Rational>& delta1,
                             const std::optional<Rational>& delta2) {
  json doc;
  doc["rank"] = config.rank;
  doc["degree"] = config.degree;
  doc["line_degree"] = config.line_degree;
  doc["genus"] = config.genus;
  doc["rho"] = {{"a", config.rho_spec.a}, {"b", config.rho_spec.b},
                {"c", config.rho_spec.c}};
  doc["sigma"] = {{"a", config.sigma_spec.a}, {"b", config.sigma_spec.b},
                  {"c", config.sigma_spec.c}};
  doc["phi"] = form_json(config.phi);
  doc["s"] = form_json(config.s);
  if (config.split_degrees) doc["split_degrees"] = *config.split_degrees;
  if (delta1) doc["delta1"] = rational_json(*delta1);
  if (delta2) doc["delta2"] = rational_json(*delta2);
  json jflags = json::array();
  for (const NumericFlag& flag : flags) {
    json jf;
    jf["ranks"] = flag.ranks;
    jf["degrees"] = flag.degrees;
    json jw = json::array();
    for (const Rational& w : flag.weights) jw.push_back(rational_json(w));
    jf["weights"] = jw;
    json jg = json::array(), jx = json::array();
    for (const Subspace& s : flag.generic_chain) jg.push_back(matrix_json(s.basis()));
    for (const Subspace& s : flag.x0_chain) jx.push_back(matrix_json(s.basis()));
    jf["generic"] = jg;
    jf["x0"] = jx;
    jflags.push_back(jf);
  }
  doc["flags"] = jflags;
  return doc.dump(2) + "\n";
}

}  // namespace swampstab
