#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swampstab/config.hpp"
#include "swampstab/selftest.hpp"

namespace py = pybind11;
using namespace swampstab;

namespace {

Rational q(const std::string& text) { return parse_rational(text); }
std::string s(const Rational& value) { return rational_to_string(value); }

Mat to_mat(const std::vector<std::vector<std::string>>& rows) {
  Mat m;
  for (const auto& row : rows) {
    Vec v;
    for (const auto& entry : row) v.push_back(q(entry));
    m.push_back(v);
  }
  return m;
}

Subspace make_subspace(int ambient_dim, const std::vector<std::vector<std::string>>& rows) {
  return Subspace::span(ambient_dim, to_mat(rows));
}

WeightedFlag make_flag(int ambient_dim, const std::vector<Subspace>& subspaces,
                       const std::vector<std::string>& weights) {
  std::vector<Rational> w;
  for (const auto& entry : weights) w.push_back(q(entry));
  return make_weighted_flag(ambient_dim, subspaces, w);
}

py::dict report_dict(const StabilityReport& report) {
  py::dict out;
  out["verdict"] = verdict_name(report.verdict);
  out["exhaustive"] = report.exhaustive_candidates;
  py::list values;
  for (const auto& [flag, value] : report.functional_values) {
    py::dict entry;
    entry["ranks"] = flag.ranks;
    entry["degrees"] = flag.degrees;
    entry["value"] = s(value);
    values.append(entry);
  }
  out["values"] = values;
  return out;
}

py::dict stab_document(const std::string& text, const std::string& delta1,
                       const std::string& delta2) {
  const ConfigDocument doc = parse_document(text);
  if (!doc.config) throw Error("ParseError", "document carries no swamp configuration");
  std::vector<NumericFlag> candidates = doc.flags;
  bool exhaustive = false;
  if (candidates.empty() && doc.config->split_degrees) {
    candidates = enumerate_candidates(*doc.config, doc.config->rank - 1);
    exhaustive = true;
  }
  return report_dict(
      check_stability(*doc.config, candidates, q(delta1), q(delta2), exhaustive));
}

std::vector<std::string> walls_document(const std::string& text,
                                        const std::string& delta1,
                                        const std::string& hi) {
  const ConfigDocument doc = parse_document(text);
  if (!doc.config) throw Error("ParseError", "document carries no swamp configuration");
  std::vector<NumericFlag> candidates = doc.flags;
  if (candidates.empty() && doc.config->split_degrees)
    candidates = enumerate_candidates(*doc.config, doc.config->rank - 1);
  std::vector<std::string> out;
  for (const Rational& w :
       delta_walls(*doc.config, candidates, q(delta1), Rational(0), q(hi)))
    out.push_back(s(w));
  return out;
}

py::list selftest(unsigned seed) {
  py::list out;
  for (const auto& r : sweeps::run_all(seed)) {
    py::dict entry;
    entry["name"] = r.name;
    entry["instances"] = r.instances;
    entry["ok"] = r.ok;
    entry["detail"] = r.detail;
    out.append(entry);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_swampstab, m) {
  m.doc() = "Exact stability computations for decorated vector bundles";

  py::register_exception<Error>(m, "DomainError");

  py::class_<TensorRepSpec>(m, "TensorRepSpec")
      .def(py::init([](int a, int b, int c, int base_dim) {
             return TensorRepSpec{a, b, c, base_dim};
           }),
           py::arg("a"), py::arg("b") = 1, py::arg("c") = 0, py::arg("base_dim") = 0)
      .def_readonly("a", &TensorRepSpec::a)
      .def_readonly("b", &TensorRepSpec::b)
      .def_readonly("c", &TensorRepSpec::c)
      .def_readonly("base_dim", &TensorRepSpec::base_dim)
      .def("degree", &TensorRepSpec::degree)
      .def("rep_dim", &TensorRepSpec::rep_dim);

  py::class_<Subspace>(m, "Subspace")
      .def(py::init(&make_subspace), py::arg("ambient_dim"), py::arg("rows"))
      .def_static("coordinate", &Subspace::coordinate)
      .def_static("full", &Subspace::full)
      .def("dim", &Subspace::dim)
      .def("ambient_dim", &Subspace::ambient_dim)
      .def("contains",
           py::overload_cast<const Subspace&>(&Subspace::contains, py::const_))
      .def("intersection_dim", &Subspace::intersection_dim)
      .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; });

  py::class_<WeightedFlag>(m, "WeightedFlag")
      .def(py::init(&make_flag), py::arg("ambient_dim"), py::arg("subspaces"),
           py::arg("weights"))
      .def("length", &WeightedFlag::length);

  py::class_<DecorationForm>(m, "DecorationForm")
      .def(py::init([](const TensorRepSpec& spec) {
        DecorationForm f;
        f.spec = spec;
        return f;
      }))
      .def("set", [](DecorationForm& f, int copy, const std::vector<int>& index,
                     const std::string& value) { f.set(copy, index, q(value)); });

  m.def("gamma_from_flag", [](const WeightedFlag& flag) {
    const WeightVector g = gamma_from_flag(flag);
    std::vector<std::pair<std::string, int>> out;
    for (int i = 0; i < g.stages(); ++i)
      out.emplace_back(s(g.values[i]), g.multiplicities[i]);
    return out;
  });
  m.def("mu_tensor",
        [](const WeightedFlag& flag, const DecorationForm& form) {
          return s(mu_tensor(flag, form));
        });
  m.def("mu_bruteforce_oracle",
        [](const WeightedFlag& flag, const DecorationForm& form) {
          return s(mu_bruteforce_oracle(flag, form));
        });
  m.def("euler_p", &euler_p);
  m.def("q_poly", [](int s_arg, const std::vector<std::string>& theta, int r) {
    std::vector<Rational> th;
    for (const auto& t : theta) th.push_back(q(t));
    return s(q_poly(s_arg, th, r));
  });
  m.def("stab_document", &stab_document, py::arg("text"), py::arg("delta1") = "1/2",
        py::arg("delta2") = "1/2");
  m.def("walls_document", &walls_document, py::arg("text"), py::arg("delta1") = "1/2",
        py::arg("hi") = "1000000");
  m.def("selftest", &selftest, py::arg("seed") = 0);
}
