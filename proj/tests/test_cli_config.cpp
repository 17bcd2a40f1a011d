#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "swampstab/config.hpp"

using namespace swampstab;

namespace {

const char* kWorked = R"({
  "rank": 2,
  "degree": 0,
  "genus": 0,
  "delta1": "1/2",
  "delta2": "1/2",
  "rho": {"a": 0},
  "sigma": {"a": 1},
  "phi": [{"copy": 1, "index": [], "value": "1"}],
  "s": [{"copy": 1, "index": [1], "value": "1"}],
  "flags": [
    {"ranks": [1], "degrees": [0], "weights": ["1"], "x0": [[["0", "1"]]]},
    {"ranks": [1], "degrees": [-1]}
  ]
})";

}  // namespace

TEST_CASE("document parsing") {
  const ConfigDocument doc = parse_document(kWorked);
  CHECK(doc.rank == 2);
  CHECK(doc.degree == 0);
  REQUIRE(doc.config.has_value());
  CHECK(doc.config->rho_spec.a == 0);
  CHECK(doc.config->sigma_spec.a == 1);
  CHECK(doc.config->sigma_spec.base_dim == 2);
  REQUIRE(doc.delta1.has_value());
  CHECK(*doc.delta1 == rat(1, 2));
  REQUIRE(doc.flags.size() == 2);

  // Explicit x0 chain is honored; the generic chain defaults to coordinates.
  CHECK(doc.flags[0].x0_chain[0] == Subspace::coordinate(2, {2}));
  CHECK(doc.flags[0].generic_chain[0] == Subspace::coordinate(2, {1}));

  // Omitted weights default to 1, omitted chains to coordinate prefixes.
  CHECK(doc.flags[1].weights == std::vector<Rational>{rat(1)});
  CHECK(doc.flags[1].x0_chain[0] == Subspace::coordinate(2, {1}));

  const Rational value =
      stability_functional(*doc.config, doc.flags[0], *doc.delta1, *doc.delta2);
  CHECK(value == rat(-1, 2));
}

TEST_CASE("floats and malformed input are rejected") {
  CHECK_THROWS_WITH_AS(parse_document("{\"rank\": 2.5}"),
                       doctest::Contains("floating point"), Error);
  CHECK_THROWS_AS(parse_document("{\"rank\": 2, \"delta1\": \"0.5\"}"), Error);
  CHECK_THROWS_AS(parse_document("not json"), Error);
  CHECK_THROWS_AS(parse_document("{\"degree\": 1}"), Error);  // missing rank
  CHECK_THROWS_AS(parse_document("{\"rank\": 2, \"rho\": {\"a\": 1}, "
                                 "\"sigma\": {\"a\": 1}, \"phi\": [], \"s\": []}"),
                  Error);  // zero decorations

  try {
    parse_document("{\"rank\": 2.5}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == "ParseError");
  }
}

TEST_CASE("rational serialization is canonical") {
  CHECK(rational_to_string(rat(2, 4)) == "1/2");
  CHECK(rational_to_string(rat(-6, 3)) == "-2");
  CHECK(rational_to_string(rat(0, 5)) == "0");
  CHECK(parse_rational("7/21") == rat(1, 3));
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1e3"), Error);
  CHECK_THROWS_AS(parse_rational("2/0"), Error);
}

TEST_CASE("document rendering round trips") {
  const ConfigDocument doc = parse_document(kWorked);
  const std::string text =
      document_to_text(*doc.config, doc.flags, doc.delta1, doc.delta2);
  const ConfigDocument again = parse_document(text);
  REQUIRE(again.config.has_value());
  CHECK(again.rank == doc.rank);
  CHECK(again.config->phi.coeffs == doc.config->phi.coeffs);
  CHECK(again.config->s.coeffs == doc.config->s.coeffs);
  REQUIRE(again.flags.size() == doc.flags.size());
  for (size_t i = 0; i < doc.flags.size(); ++i) {
    CHECK(again.flags[i].ranks == doc.flags[i].ranks);
    CHECK(again.flags[i].degrees == doc.flags[i].degrees);
    CHECK(again.flags[i].weights == doc.flags[i].weights);
    CHECK(again.flags[i].x0_chain == doc.flags[i].x0_chain);
  }
  // Rendering is deterministic.
  CHECK(text == document_to_text(*doc.config, doc.flags, doc.delta1, doc.delta2));
}

TEST_CASE("parabolic and level blocks") {
  const char* text = R"({
    "rank": 2, "degree": 0,
    "parabolic": {
      "flag_type": [1], "beta": [1], "delta2": "1/4",
      "candidates": [{"rank": 1, "degree": -1, "x0": [["1", "0"]]}]
    },
    "level": {
      "stratum": [1, 2], "l": ["0"], "theta": ["1", "1"], "delta2": "1/3",
      "w": [[["0", "1"]]], "wprime": [[["1", "0"]]],
      "v": [[["1"]], [["1"]]],
      "candidates": [{"rank": 1, "degree": -1, "x0": [["1", "0"]]}]
    }
  })";
  const ConfigDocument doc = parse_document(text);
  REQUIRE(doc.parabolic.has_value());
  CHECK(doc.parabolic->structure.flag_type == std::vector<int>{1});
  CHECK(doc.parabolic->structure.delta2 == rat(1, 4));
  CHECK(doc.parabolic->structure.x0_flag[0] == Subspace::coordinate(2, {1}));
  REQUIRE(doc.parabolic->candidates.size() == 1);
  CHECK(doc.parabolic->candidates[0].degree == -1);

  REQUIRE(doc.level.has_value());
  CHECK(doc.level->dec.stratum == std::vector<int>{1, 2});
  CHECK(doc.level->dec.w[0] == Subspace::coordinate(2, {2}));
  CHECK(doc.level->theta.size() == 2);
  const CompletedHom point = reconstruct_completed_hom(doc.level->dec);
  CHECK(omega_check(point) == std::vector<int>{1, 2});
}
