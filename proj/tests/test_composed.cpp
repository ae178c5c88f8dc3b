#include <doctest.h>

#include <algorithm>

#include "rup/algebra/composed.hpp"
#include "rup/algebra/real_roots.hpp"
#include "test_support.hpp"

using namespace rup;
using rup::testing::q;

namespace {

// Independent route: power sums of the pairwise products/sums via Newton's
// identities.
std::vector<Rational> power_sums(const Polynomial& monic, int count) {
  const int m = monic.degree();
  // e_i with sign convention z^m + a_{m-1} z^{m-1} + ... ; p_k via Newton
  std::vector<Rational> p(count + 1);
  p[0] = m;
  for (int k = 1; k <= count; ++k) {
    Rational acc = 0;
    for (int i = 1; i < k && i <= m; ++i) acc += monic.coeff(m - i) * p[k - i];
    if (k <= m) acc += monic.coeff(m - k) * k;
    p[k] = -acc;
  }
  return p;
}

Polynomial from_power_sums(const std::vector<Rational>& p, int degree) {
  std::vector<Rational> a(degree + 1);  // a[degree - i] holds coefficient of z^(degree - i)
  a[degree] = 1;
  for (int k = 1; k <= degree; ++k) {
    Rational acc = p[k];
    for (int i = 1; i < k; ++i) acc += a[degree - i] * p[k - i];
    a[degree - k] = -acc / k;
  }
  return Polynomial(std::move(a));
}

}  // namespace

TEST_CASE("resultant matches product formula") {
  // Res(z - a, q) = q(a) for monic linear first argument
  const Polynomial r{3, -1, 2};
  CHECK(resultant(Polynomial{-5, 1}, r) == r(5));
  CHECK(resultant(Polynomial{-1, 0, 1}, Polynomial{-1, 1}) == 0);
  CHECK(resultant(Polynomial{}, r) == 0);
}

TEST_CASE("composed_product examples") {
  CHECK(composed_product(Polynomial{-3, 1}) == Polynomial{-9, 1});
  // roots +-sqrt2 -> products {2, -2, -2, 2}
  CHECK(composed_product(Polynomial{-2, 0, 1}) == pow(Polynomial{-2, 1}, 2) * pow(Polynomial{2, 1}, 2));
  const Polynomial cp = composed_product(Polynomial{2, -2, 1});
  CHECK(cp.degree() == 4);
  CHECK(cp(2) == 0);
}

TEST_CASE("composed_sum examples") {
  CHECK(composed_sum(Polynomial{-2, 0, 1}) == Polynomial{0, 0, -8, 0, 1});
  CHECK(composed_sum(Polynomial{-3, 1}) == Polynomial{-6, 1});
  CHECK(composed_sum(Polynomial{2, -2, 1})(2) == 0);
}

TEST_CASE("composed polynomials agree with brute force on rational roots") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> roots;
    for (int i = 0; i <= trial % 5; ++i) roots.push_back(rup::testing::random_rational(rng, -6, 6, 3));
    const Polynomial p = Polynomial::from_roots(roots);
    std::vector<Rational> products;
    std::vector<Rational> sums;
    for (const auto& a : roots) {
      for (const auto& b : roots) {
        products.push_back(a * b);
        sums.push_back(a + b);
      }
    }
    CHECK(composed_product(p) == Polynomial::from_roots(products));
    CHECK(composed_sum(p) == Polynomial::from_roots(sums));
  }
}

TEST_CASE("composed_product agrees with the power-sum route on irrational roots") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = rup::testing::random_polynomial(rng, 1 + trial % 4, 5).monic();
    const int m = p.degree();
    const auto ps = power_sums(p, m * m);
    std::vector<Rational> prod_sums(m * m + 1);
    for (int k = 0; k <= m * m; ++k) prod_sums[k] = ps[k] * ps[k];
    CHECK(composed_product(p) == from_power_sums(prod_sums, m * m));
    std::vector<Rational> sum_sums(m * m + 1);
    for (int k = 0; k <= m * m; ++k) {
      Rational acc = 0;
      for (int l = 0; l <= k; ++l) acc += Rational(binomial(k, l)) * ps[l] * ps[k - l];
      sum_sums[k] = acc;
    }
    CHECK(composed_sum(p) == from_power_sums(sum_sums, m * m));
  }
}

TEST_CASE("modulus_squared and real_part_doubled examples") {
  const auto i_boxes = isolate_complex_roots(Polynomial{1, 0, 1});
  for (const auto& b : i_boxes) {
    CHECK(compare_algebraic(modulus_squared(b), 1) == std::strong_ordering::equal);
    CHECK(compare_algebraic(real_part_doubled(b), 0) == std::strong_ordering::equal);
  }
  const Polynomial p{2, -2, 1};
  for (const auto& b : isolate_complex_roots(p)) {
    CHECK(compare_algebraic(modulus_squared(b, p), 2) == std::strong_ordering::equal);
    CHECK(compare_algebraic(real_part_doubled(b, p), 2) == std::strong_ordering::equal);
  }
  // real box of r -> r^2 and 2r
  const Polynomial golden{-1, -1, 1};
  for (const auto& b : isolate_complex_roots(golden)) {
    const AlgebraicReal r = real_value(b);
    // both squared roots of z^2 - z - 1 satisfy x^2 - 3x + 1 = 0
    const AlgebraicReal sq = modulus_squared(b);
    CHECK(sign_at(Polynomial{1, -3, 1}, sq) == 0);
    CHECK(std::abs(sq.approx() - r.approx() * r.approx()) < 1e-12);
    CHECK(std::abs(real_part_doubled(b).approx() - 2 * r.approx()) < 1e-12);
  }
}

TEST_CASE("modulus_squared of a real box equals the exact square") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = rup::testing::random_polynomial(rng, 2 + trial % 3, 4);
    for (const auto& b : isolate_complex_roots(p)) {
      if (!b.real) continue;
      const AlgebraicReal r = real_value(b);
      // r^2 as an algebraic number: root of p(sqrt x) p(-sqrt x) isolated from r's interval
      const Polynomial& f = b.factor;
      Polynomial even;
      Polynomial odd;
      for (int i = 0; i <= f.degree(); ++i) {
        (i % 2 == 0 ? even : odd) += Polynomial::monomial(f.coeff(i), i / 2);
      }
      const Polynomial squares = even * even - Polynomial{0, 1} * odd * odd;
      std::optional<AlgebraicReal> expected;
      AlgebraicReal refined = r;
      while (!(expected = isolate_in(squares, square(Interval{refined.lo(), refined.hi()})))) {
        refined = refined.bisected();
      }
      CHECK(compare_algebraic(modulus_squared(b), *expected) == std::strong_ordering::equal);
    }
  }
}
