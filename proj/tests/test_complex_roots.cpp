#include <doctest.h>

#include <algorithm>
#include <complex>

#include "rup/algebra/complex_roots.hpp"
#include "rup/errors.hpp"
#include "test_support.hpp"

using namespace rup;
using rup::testing::q;

namespace {

bool contains_point(const RootBox& b, double re, double im) {
  return b.re.lo.get_d() <= re && re <= b.re.hi.get_d() && b.im.lo.get_d() <= im && im <= b.im.hi.get_d();
}

int nonreal_count(const std::vector<RootBox>& boxes) {
  return static_cast<int>(std::count_if(boxes.begin(), boxes.end(), [](const RootBox& b) { return !b.real; }));
}

// every box has a partner with negated imaginary interval
bool conjugate_closed(const std::vector<RootBox>& boxes) {
  for (const auto& b : boxes) {
    const Interval conj{-b.im.hi, -b.im.lo};
    const bool found = std::any_of(boxes.begin(), boxes.end(), [&](const RootBox& o) {
      return o.re == b.re && o.im == conj && o.multiplicity == b.multiplicity;
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("isolate_complex_roots examples") {
  auto boxes = isolate_complex_roots(Polynomial{1, 0, 1});
  REQUIRE(boxes.size() == 2);
  CHECK(nonreal_count(boxes) == 2);
  CHECK(std::any_of(boxes.begin(), boxes.end(), [](const RootBox& b) { return contains_point(b, 0, 1); }));
  CHECK(std::any_of(boxes.begin(), boxes.end(), [](const RootBox& b) { return contains_point(b, 0, -1); }));

  boxes = isolate_complex_roots(Polynomial{1, 0, 1} * Polynomial{-1, 1});
  REQUIRE(boxes.size() == 3);
  CHECK(nonreal_count(boxes) == 2);
  CHECK(boxes[0].real);
  CHECK(compare_algebraic(real_value(boxes[0]), 1) == std::strong_ordering::equal);

  boxes = isolate_complex_roots(Polynomial{-3, 1});
  REQUIRE(boxes.size() == 1);
  CHECK(boxes[0].real);
  CHECK(boxes[0].re.contains(3));

  CHECK_THROWS_AS(isolate_complex_roots(Polynomial{5}), DegenerateInput);
}

TEST_CASE("isolate_complex_roots covers every root exactly once") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int degree = 1 + trial % 7;
    Polynomial p = rup::testing::random_polynomial(rng, degree, 6);
    if (trial % 5 == 0) p *= Polynomial{1, 0, 1};  // repeated-root interplay below
    if (trial % 7 == 0) p *= pow(Polynomial{2, -2, 1}, 2);
    const auto boxes = isolate_complex_roots(p);
    int counted = 0;
    for (const auto& b : boxes) counted += b.multiplicity;
    CHECK(counted == p.degree());
    CHECK(conjugate_closed(boxes));
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      if (!boxes[i].real) {
        CHECK(boxes[i].im.lo * boxes[i].im.hi > 0);
      }
      for (std::size_t j = i + 1; j < boxes.size(); ++j) CHECK(boxes_disjoint(boxes[i], boxes[j]));
    }
    // compare to a floating-point root finder by residual at box centres
    for (const auto& coarse : boxes) {
      const RootBox b = refine(coarse, q(1, 1 << 30));
      std::complex<double> z(b.re.midpoint().get_d(), b.im.midpoint().get_d());
      std::complex<double> value = 0;
      double scale = 0;
      const auto& c = b.factor.coefficients();
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        value = value * z + it->get_d();
        scale = scale * std::abs(z) + std::abs(it->get_d());
      }
      CHECK(std::abs(value) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("refine shrinks boxes around the same root") {
  const auto boxes = isolate_complex_roots(Polynomial{2, -2, 1});  // 1 +- i
  REQUIRE(boxes.size() == 2);
  for (const auto& b : boxes) {
    const RootBox r = refine(b, q(1, 1000000));
    CHECK(r.width() <= q(1, 1000000));
    CHECK(box_contains(b, r));
    CHECK(contains_point(r, 1, b.im.lo > 0 ? 1 : -1));
  }
}
