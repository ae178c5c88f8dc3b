#include "rup/algebra/composed.hpp"

#include "rup/errors.hpp"

namespace rup {

Rational resultant(const Polynomial& a_in, const Polynomial& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  Polynomial a = a_in;
  Polynomial b = b_in;
  Rational acc = 1;
  for (;;) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) return acc * pow(b.leading(), static_cast<unsigned>(m));
    if (m == 0) return acc * pow(a.leading(), static_cast<unsigned>(n));
    Polynomial r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    // Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r)
    if ((m * n) % 2 != 0) acc = -acc;
    acc *= pow(b.leading(), static_cast<unsigned>(m - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw PreconditionError("interpolation needs matching, nonempty nodes");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  Polynomial out = Polynomial::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    out *= Polynomial({-xs[i], 1});
    out += Polynomial::constant(dd[i]);
  }
  return out;
}

namespace {

template <class MakeSecond>
Polynomial composed(const Polynomial& p, MakeSecond second) {
  if (p.degree() < 1) throw DegenerateInput("composed polynomial needs degree >= 1");
  const Polynomial monic = p.monic();
  const int m = monic.degree();
  const int points = m * m + 1;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int t = 0; t < points; ++t) {
    const Rational x(t);
    xs.push_back(x);
    ys.push_back(resultant(monic, second(monic, x)));
  }
  return interpolate(xs, ys);
}

AlgebraicReal isolate_from_box(const Polynomial& defining, RootBox box,
                               Interval (*enclosure)(const RootBox&)) {
  const Polynomial sf = squarefree_part(defining);
  for (;;) {
    if (auto value = isolate_in(sf, enclosure(box))) return *value;
    box = refine(box, box.width() / 4);
  }
}

Interval modulus_enclosure(const RootBox& box) { return square(box.re) + square(box.im); }
Interval real_part_enclosure(const RootBox& box) { return scale(box.re, 2); }

void check_factor(const RootBox& box, const Polynomial& p) {
  if (!divides(box.factor, p)) throw PreconditionError("root box does not belong to the polynomial");
}

}  // namespace

Polynomial composed_product(const Polynomial& p) {
  // y^m p(x/y) = sum_i a_i x^i y^(m-i)
  return composed(p, [](const Polynomial& q, const Rational& x) {
    const int m = q.degree();
    std::vector<Rational> c(m + 1);
    Rational xp = 1;
    for (int i = 0; i <= m; ++i) {
      c[m - i] = q.coeff(i) * xp;
      xp *= x;
    }
    return Polynomial(std::move(c));
  });
}

Polynomial composed_sum(const Polynomial& p) {
  // p(x - y) as a polynomial in y
  return composed(p, [](const Polynomial& q, const Rational& x) { return q.shifted(x).scaled(-1); });
}

AlgebraicReal modulus_squared(const RootBox& box) {
  return isolate_from_box(composed_product(box.factor), box, &modulus_enclosure);
}

AlgebraicReal modulus_squared(const RootBox& box, const Polynomial& p) {
  check_factor(box, p);
  return modulus_squared(box);
}

AlgebraicReal real_part_doubled(const RootBox& box) {
  return isolate_from_box(composed_sum(box.factor), box, &real_part_enclosure);
}

AlgebraicReal real_part_doubled(const RootBox& box, const Polynomial& p) {
  check_factor(box, p);
  return real_part_doubled(box);
}

}  // namespace rup
