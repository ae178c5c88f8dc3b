#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rup/errors.hpp"
#include "rup/lds/simulate.hpp"
#include "test_support.hpp"

using namespace rup;
using rup::testing::q;

namespace {

Instance fib() { return Instance(Mode::Discrete, {-1, -1}, {0, 1}); }

std::vector<Rational> values(const Trajectory& t) {
  std::vector<Rational> out;
  for (const auto& s : t.samples) out.push_back(s.value);
  return out;
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(Mode::Discrete, {}, {}), PreconditionError);
  CHECK_THROWS_AS(Instance(Mode::Discrete, {1, 2}, {1}), PreconditionError);
  CHECK(fib().order() == 2);
}

TEST_CASE("characteristic polynomial") {
  CHECK(characteristic_poly(fib()) == Polynomial{-1, -1, 1});
  CHECK(characteristic_poly(Instance(Mode::Discrete, {2}, {1})) == Polynomial{2, 1});
  CHECK(characteristic_poly(Instance(Mode::Continuous, {1, 0}, {1, 0})) == Polynomial{1, 0, 1});
}

TEST_CASE("simulate_discrete examples") {
  CHECK(values(simulate_discrete(fib(), 7)) == std::vector<Rational>{0, 1, 1, 2, 3, 5, 8, 13});
  CHECK(values(simulate_discrete(Instance(Mode::Discrete, {-2}, {3}), 3)) == std::vector<Rational>{3, 6, 12, 24});
  for (const auto& v : values(simulate_discrete(Instance(Mode::Discrete, {5, -3, 1}, {0, 0, 0}), 20))) CHECK(v == 0);
  CHECK_THROWS_AS(simulate_discrete(Instance(Mode::Continuous, {1}, {1}), 3), ModeMismatch);
}

TEST_CASE("simulate_discrete satisfies the recurrence and is linear in v") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + trial % 5;
    std::vector<Rational> c, v1, v2, sum;
    for (std::size_t i = 0; i < k; ++i) {
      c.push_back(rup::testing::random_rational(rng, -5, 5, 4));
      v1.push_back(rup::testing::random_rational(rng, -5, 5, 4));
      v2.push_back(rup::testing::random_rational(rng, -5, 5, 4));
      sum.push_back(v1.back() + v2.back());
    }
    const auto u = discrete_terms(Instance(Mode::Discrete, c, v1), 40);
    for (std::size_t n = 0; n + k < u.size(); ++n) {
      Rational acc = u[n + k];
      for (std::size_t i = 0; i < k; ++i) acc += c[i] * u[n + i];
      CHECK(acc == 0);
    }
    const auto w = discrete_terms(Instance(Mode::Discrete, c, v2), 40);
    const auto s = discrete_terms(Instance(Mode::Discrete, c, sum), 40);
    for (std::size_t n = 0; n < 40; ++n) CHECK(s[n] == u[n] + w[n]);
  }
}

TEST_CASE("simulate_continuous examples") {
  const Instance cosine(Mode::Continuous, {1, 0}, {1, 0});
  const std::vector<Rational> at_pi{from_double(std::numbers::pi)};
  const auto c = simulate_continuous(cosine, at_pi);
  REQUIRE(c.samples.size() == 1);
  CHECK(std::abs(c.samples[0].value.get_d() + 1) < 1e-9);
  CHECK(c.samples[0].error_bound <= 1e-9);

  const Instance expo(Mode::Continuous, {-1}, {1});
  const std::vector<Rational> at_one{1};
  CHECK(std::abs(simulate_continuous(expo, at_one).samples[0].value.get_d() - std::numbers::e) < 1e-9);

  const Instance zero(Mode::Continuous, {3, 1}, {0, 0});
  const std::vector<Rational> times{0, 1, 5};
  for (const auto& s : simulate_continuous(zero, times).samples) CHECK(s.value == 0);
}

TEST_CASE("simulate_continuous reports its error bound honestly") {
  const Instance expo(Mode::Continuous, {-1}, {1});
  std::vector<Rational> times;
  for (int i = 0; i <= 40; ++i) times.push_back(q(i, 8));
  const auto traj = simulate_continuous(expo, times, q(1, 100000000));
  for (const auto& s : traj.samples) {
    const double exact = std::exp(s.at.get_d());
    CHECK(std::abs(s.value.get_d() - exact) <= s.error_bound + 1e-15 * exact);
  }
  // u(s + t) = u(s) u(t)
  for (std::size_t i = 0; i + 8 < traj.samples.size(); i += 3) {
    const double lhs = traj.samples[i + 8].value.get_d();
    const double rhs = traj.samples[i].value.get_d() * traj.samples[8].value.get_d();
    CHECK(std::abs(lhs - rhs) <= 1e-8);
  }
}

TEST_CASE("simulate_continuous fails loudly") {
  const Instance fast(Mode::Continuous, {-1000}, {1});
  const std::vector<Rational> far{50};
  CHECK_THROWS_AS(simulate_continuous(fast, far), SimulationError);
  const Instance cosine(Mode::Continuous, {1, 0}, {1, 0});
  const std::vector<Rational> unordered{2, 1};
  CHECK_THROWS_AS(simulate_continuous(cosine, unordered), PreconditionError);
  const std::vector<Rational> negative{-1};
  CHECK_THROWS_AS(simulate_continuous(cosine, negative), PreconditionError);
  CHECK_THROWS_AS(simulate_continuous(Instance(Mode::Discrete, {1}, {1}), negative), ModeMismatch);
}
