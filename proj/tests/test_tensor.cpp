#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "swampstab/tensor.hpp"

using namespace swampstab;

namespace {

WeightedFlag coord_flag(int n, const std::vector<int>& dims,
                        const std::vector<Rational>& weights) {
  std::vector<Subspace> chain;
  for (int d : dims) {
    std::vector<int> coords;
    for (int c = 1; c <= d; ++c) coords.push_back(c);
    chain.push_back(Subspace::coordinate(n, coords));
  }
  return make_weighted_flag(n, chain, weights);
}

DecorationForm dual_basis_form(int base_dim, const std::vector<int>& index) {
  DecorationForm f;
  f.spec = TensorRepSpec{static_cast<int>(index.size()), 1, 0, base_dim};
  f.set(1, index, rat(1));
  return f;
}

DecorationForm random_form(std::mt19937_64& rng, const TensorRepSpec& spec) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> copy_dist(1, spec.b);
  std::uniform_int_distribution<int> entry(1, spec.base_dim);
  DecorationForm f;
  f.spec = spec;
  std::uniform_int_distribution<int> nterms(1, 4);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx(spec.a);
    for (auto& i : idx) i = entry(rng);
    int c = coeff(rng);
    if (c == 0) c = 1;
    f.set(copy_dist(rng), idx, rat(c));
  }
  return f;
}

WeightedFlag random_flag(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> len_dist(0, n - 1);
  const int k = len_dist(rng);
  std::vector<int> all;
  for (int d = 1; d < n; ++d) all.push_back(d);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> dims(all.begin(), all.begin() + k);
  std::sort(dims.begin(), dims.end());
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> wnum(1, 4), wden(1, 3);
  Mat rows;
  std::vector<Subspace> chain;
  for (int d : dims) {
    while (static_cast<int>(rows.size()) < d) {
      Vec v(n);
      for (auto& x : v) x = Rational(entry(rng));
      Mat trial = rows;
      trial.push_back(v);
      if (rank_of(trial) == static_cast<int>(rows.size()) + 1) rows.push_back(v);
    }
    chain.push_back(Subspace::span(n, rows));
  }
  std::vector<Rational> weights;
  for (size_t j = 0; j < dims.size(); ++j) weights.push_back(rat(wnum(rng), wden(rng)));
  return make_weighted_flag(n, chain, weights);
}

}  // namespace

TEST_CASE("tuple_weight") {
  WeightVector g;
  g.ambient_dim = 2;
  g.values = {rat(-1), rat(1)};
  g.multiplicities = {1, 1};
  CHECK(tuple_weight({1, 1}, g) == rat(-2));
  CHECK(tuple_weight({1, 2}, g) == rat(0));
  CHECK(tuple_weight({}, g) == rat(0));
}

TEST_CASE("support_nonzero worked values") {
  auto flag = coord_flag(2, {1}, {rat(1)});
  auto f11 = dual_basis_form(2, {1, 1});
  CHECK(support_nonzero(f11, flag, {1, 1}));
  CHECK(support_nonzero(f11, flag, {2, 2}));
  auto f22 = dual_basis_form(2, {2, 2});
  CHECK_FALSE(support_nonzero(f22, flag, {1, 1}));
}

TEST_CASE("support monotonicity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    auto flag = random_flag(rng, n);
    TensorRepSpec spec{2, 1, 0, n};
    auto form = random_form(rng, spec);
    const int k = flag.length();
    for (int i1 = 1; i1 <= k + 1; ++i1)
      for (int i2 = 1; i2 <= k + 1; ++i2) {
        if (!support_nonzero(form, flag, {i1, i2})) continue;
        for (int j1 = i1; j1 <= k + 1; ++j1)
          for (int j2 = i2; j2 <= k + 1; ++j2)
            CHECK(support_nonzero(form, flag, {j1, j2}));
      }
  }
}

TEST_CASE("mu_tensor worked values") {
  auto flag = coord_flag(2, {1}, {rat(1)});
  auto f = dual_basis_form(2, {1, 1});
  CHECK(mu_tensor(flag, f) == rat(2));
  CHECK(mu_bruteforce_oracle(flag, f) == rat(2));

  // a=1 reduces to mu_linear
  auto half = coord_flag(2, {1}, {rat(1, 2)});
  auto e2 = dual_basis_form(2, {2});
  CHECK(mu_tensor(half, e2) == rat(-1, 2));

  // scaling weights doubles the value
  auto twice = coord_flag(2, {1}, {rat(2)});
  CHECK(mu_tensor(twice, f) == rat(4));
}

TEST_CASE("a=0 forms have mu zero") {
  auto flag = coord_flag(2, {1}, {rat(1)});
  DecorationForm f;
  f.spec = TensorRepSpec{0, 1, 0, 2};
  f.set(1, {}, rat(1));
  CHECK(mu_tensor(flag, f) == 0);
  CHECK(mu_bruteforce_oracle(flag, f) == 0);
}

TEST_CASE("oracle equivalence sweep") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> a_dist(1, 3), b_dist(1, 2), n_dist(2, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = n_dist(rng);
    TensorRepSpec spec{a_dist(rng), b_dist(rng), 0, n};
    auto form = random_form(rng, spec);
    auto flag = random_flag(rng, n);
    CHECK(mu_tensor(flag, form) == mu_bruteforce_oracle(flag, form));
  }
}

TEST_CASE("mu homogeneity in alpha and form scaling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    TensorRepSpec spec{2, 1, 0, n};
    auto form = random_form(rng, spec);
    auto flag = random_flag(rng, n);
    const Rational mu = mu_tensor(flag, form);
    WeightedFlag scaled = flag;
    for (auto& w : scaled.weights) w *= 3;
    CHECK(mu_tensor(scaled, form) == 3 * mu);
    DecorationForm scaled_form = form;
    for (auto& [k, v] : scaled_form.coeffs) v *= rat(-5, 3);
    CHECK(mu_tensor(flag, scaled_form) == mu);
  }
}

TEST_CASE("weight-shift estimate") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> bnum(1, 3), bden(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    TensorRepSpec spec{1 + static_cast<int>(rng() % 3), 1, 0, n};
    auto form = random_form(rng, spec);
    auto flag = random_flag(rng, n);
    if (flag.length() == 0) continue;
    WeightedFlag bumped = flag;
    Rational bound = 0;
    for (int j = 0; j < flag.length(); ++j) {
      const Rational beta = rat(bnum(rng), bden(rng));
      bumped.weights[j] += beta;
      bound += beta * flag.subspaces[j].dim();
    }
    CHECK(mu_tensor(bumped, form) >= mu_tensor(flag, form) - spec.a * bound);
  }
}

TEST_CASE("induced flag worked example") {
  auto flag = coord_flag(2, {1}, {rat(1, 2)});
  TensorRepSpec spec{2, 1, 0, 2};
  auto data = induced_flag_data(flag, spec);
  REQUIRE(data.flag.length() == 2);
  CHECK(data.flag.ambient_dim == 4);
  CHECK(data.flag.subspaces[0].dim() == 1);
  CHECK(data.flag.subspaces[1].dim() == 3);
  CHECK(data.flag.weights == std::vector<Rational>{rat(1, 4), rat(1, 4)});

  auto trivial = make_weighted_flag(2, {}, {});
  CHECK(induced_flag(trivial, spec).length() == 0);
}

TEST_CASE("mu against induced flag equals mu_tensor") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> a_dist(1, 3), b_dist(1, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    TensorRepSpec spec{a_dist(rng), b_dist(rng), 0, n};
    auto form = random_form(rng, spec);
    auto flag = random_flag(rng, n);
    auto data = induced_flag_data(flag, spec);
    Vec f = form_in_adapted_coords(form, flag, data.basis_order);
    CHECK(mu_linear(data.flag, f) == mu_tensor(flag, form));
  }
}

TEST_CASE("mu is splitting independent") {
  // Oracle route and direct route use different splittings of the chain;
  // additionally perturb the adapted basis by a chain-preserving change.
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3;
    TensorRepSpec spec{2, 1, 0, n};
    auto form = random_form(rng, spec);
    auto flag = random_flag(rng, n);
    if (flag.length() == 0) continue;
    // Replace each chain member basis by a random invertible recombination.
    std::vector<Subspace> chain;
    std::uniform_int_distribution<int> entry(-2, 2);
    for (const auto& s : flag.subspaces) {
      Mat mixed;
      for (const auto& row : s.basis()) {
        Vec v = row;
        for (const auto& other : s.basis()) {
          const Rational c = Rational(entry(rng));
          for (int i = 0; i < n; ++i) v[i] += c * other[i];
        }
        mixed.push_back(v);
      }
      Subspace t = Subspace::span(n, mixed);
      chain.push_back(t.dim() == s.dim() ? t : s);
    }
    auto flag2 = make_weighted_flag(n, chain, flag.weights);
    REQUIRE(flag2.subspaces == flag.subspaces);  // RREF canonical form
    CHECK(mu_tensor(flag2, form) == mu_bruteforce_oracle(flag, form));
  }
}

TEST_CASE("plucker form worked values") {
  auto u1 = Subspace::coordinate(2, {1});
  auto form = plucker_form({u1}, {1});
  CHECK(form.spec.a == 1);
  // quotient projection kills e1
  CHECK(form.evaluate(1, {Vec{rat(1), rat(0)}}) == 0);
  CHECK(form.evaluate(1, {Vec{rat(0), rat(1)}}) == 1);

  auto flag1 = coord_flag(2, {1}, {rat(1)});
  CHECK(mu_tensor(flag1, form) == rat(-1));
  auto e2flag = make_weighted_flag(2, {Subspace::coordinate(2, {2})}, {rat(1)});
  CHECK(mu_tensor(e2flag, form) == rat(1));
}

TEST_CASE("plucker form is antisymmetric per block") {
  auto u1 = Subspace::coordinate(3, {1});
  auto form = plucker_form({u1}, {1});  // a = 2 block on V/U_1
  Vec x{rat(1), rat(2), rat(3)}, y{rat(0), rat(1), rat(-1)};
  CHECK(form.evaluate(1, {x, y}) == -form.evaluate(1, {y, x}));
  CHECK(form.evaluate(1, {x, x}) == 0);
}
