#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "swampstab/gieseker.hpp"
#include "swampstab/selftest.hpp"

using namespace swampstab;

TEST_CASE("euler characteristic polynomial") {
  CHECK(euler_p(3, 0, 2, 0) == 8);
  CHECK(euler_p(-1, 0, 3, 0) == 0);  // n = g - 1, d = 0
  for (long n = 0; n < 5; ++n) CHECK(euler_p(n + 1, 2, 2, 1) > euler_p(n, 2, 2, 1));
}

TEST_CASE("linearization") {
  const Linearization lin = make_linearization(10, rat(1, 2), rat(1, 3), 1, 1, 2);
  CHECK(lin.z == 6);
  CHECK(lin.eta == 55);
  CHECK(lin.theta1 == 6);
  CHECK(lin.theta2 == 4);

  const Linearization integral = make_linearization(10, rat(1), rat(2), 1, 1, 2);
  CHECK(integral.z == 1);
  CHECK(integral.eta == 7);
  CHECK(integral.theta1 == 2);
  CHECK(integral.theta2 == 4);

  CHECK_THROWS_AS(make_linearization(2, rat(1), rat(3), 1, 1, 2), Error);
}

TEST_CASE("quotient weight") {
  SectionFlag flag;
  flag.total_dim = 8;
  flag.dims = {3};
  flag.weights = {rat(1)};
  flag.gen_ranks = {1};
  CHECK(gies_weight_quot(flag, 2) == rat(2));  // 8*1 - 2*3

  SectionFlag proportional;
  proportional.total_dim = 8;
  proportional.dims = {4};
  proportional.weights = {rat(1)};
  proportional.gen_ranks = {1};
  CHECK(gies_weight_quot(proportional, 2) == 0);

  flag.weights = {rat(5)};
  CHECK(gies_weight_quot(flag, 2) == rat(10));
}

TEST_CASE("tensor weight on the section space") {
  SectionFlag flag;
  flag.total_dim = 8;
  flag.dims = {3};
  flag.weights = {rat(1)};
  flag.gen_ranks = {1};

  const auto both = [](const IndexTuple&) { return true; };
  CHECK(gies_weight_tensor(flag, both, 1) == rat(5));  // -min{3-8, 3}

  const auto only_top = [](const IndexTuple& t) { return t[0] == 2; };
  CHECK(gies_weight_tensor(flag, only_top, 1) == rat(-3));

  const auto nothing = [](const IndexTuple&) { return false; };
  CHECK_THROWS_AS(gies_weight_tensor(flag, nothing, 1), Error);

  // Two-sided estimate for every support choice on a 2-tensor.
  for (int mask = 1; mask < 16; ++mask) {
    const auto support = [mask](const IndexTuple& t) {
      return (mask >> ((t[0] - 1) * 2 + (t[1] - 1))) & 1;
    };
    const Rational value = gies_weight_tensor(flag, support, 2);
    CHECK(value >= rat(-2 * 3));
    CHECK(value <= rat(2 * (8 - 3)));
  }
}

TEST_CASE("total weight") {
  Linearization lin;
  lin.z = 6;
  lin.eta = 55;
  lin.theta1 = 6;
  lin.theta2 = 4;
  CHECK(total_gies_weight(lin, rat(0), rat(0), rat(0)) == 0);
  Linearization unit;
  unit.eta = 1;
  unit.theta1 = 1;
  unit.theta2 = 1;
  CHECK(total_gies_weight(unit, rat(1), rat(2), rat(3)) == rat(6));
  CHECK(total_gies_weight(unit, rat(-1), rat(-2), rat(-3)) == rat(-6));
}

TEST_CASE("transport to the section space") {
  NumericFlag eflag;
  eflag.ranks = {1};
  eflag.degrees = {0};
  eflag.weights = {rat(1)};
  eflag.generic_chain = {Subspace::coordinate(2, {1})};
  eflag.x0_chain = {Subspace::coordinate(2, {1})};

  const SectionFlag single = transport_gamma(eflag, {3}, 8);
  CHECK(single.dims == std::vector<int>{3});
  CHECK(single.weights == std::vector<Rational>{rat(1)});
  CHECK(single.gen_ranks == std::vector<int>{1});

  NumericFlag two;
  two.ranks = {1, 1};
  two.degrees = {0, 0};
  two.weights = {rat(1), rat(2)};
  const SectionFlag merged = transport_gamma(two, {3, 3}, 8);
  CHECK(merged.dims == std::vector<int>{3});
  CHECK(merged.weights == std::vector<Rational>{rat(3)});

  const SectionFlag trivial = transport_gamma(eflag, {0}, 8);
  CHECK(trivial.length() == 0);

  CHECK_THROWS_AS(transport_gamma(eflag, {9}, 8), Error);
  CHECK_THROWS_AS(transport_gamma(two, {3, 2}, 8), Error);
}

TEST_CASE("transport back to the bundle") {
  SectionFlag yflag;
  yflag.total_dim = 8;
  yflag.dims = {3};
  yflag.weights = {rat(2)};
  yflag.gen_ranks = {1};

  GeneratedStep step;
  step.rank = 1;
  step.degree = 0;
  step.h1_zero = true;
  step.coords = {1};
  const NumericFlag back = transport_q(yflag, {step}, 2);
  CHECK(back.ranks == std::vector<int>{1});
  CHECK(back.weights == std::vector<Rational>{rat(2)});

  SectionFlag two;
  two.total_dim = 8;
  two.dims = {2, 3};
  two.weights = {rat(1), rat(1)};
  two.gen_ranks = {1, 1};
  const NumericFlag merged = transport_q(two, {step, step}, 2);
  CHECK(merged.length() == 1);
  CHECK(merged.weights == std::vector<Rational>{rat(2)});

  GeneratedStep failing = step;
  failing.h1_zero = false;
  CHECK(transport_q(yflag, {failing}, 2).length() == 0);
}

TEST_CASE("split-model comparison and transport round trip") {
  const auto result = sweeps::gieseker_sweep(42, 8);
  INFO(result.detail);
  CHECK(result.ok);
}
