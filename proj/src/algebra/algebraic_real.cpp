#include "rup/algebra/algebraic_real.hpp"

#include <algorithm>
#include <sstream>

#include "rup/algebra/real_roots.hpp"
#include "rup/errors.hpp"

namespace rup {

AlgebraicReal::AlgebraicReal(Polynomial poly, Rational lo, Rational hi)
    : poly_(poly.monic()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (poly_.degree() < 1) throw PreconditionError("algebraic number needs a non-constant polynomial");
  if (lo_ > hi_) throw PreconditionError("empty isolating interval");
  if (poly_gcd(poly_, poly_.derivative()).degree() > 0) {
    throw PreconditionError("defining polynomial is not square-free");
  }
  if (SturmSequence(poly_).count_roots(lo_, hi_) != 1) {
    throw PreconditionError("interval does not isolate exactly one root");
  }
  collapse_root_endpoints();
}

AlgebraicReal::AlgebraicReal(const Rational& value) : poly_({-value, 1}), lo_(value), hi_(value) {}

AlgebraicReal::AlgebraicReal(Trusted, Polynomial poly, Rational lo, Rational hi)
    : poly_(poly.monic()), lo_(std::move(lo)), hi_(std::move(hi)) {
  collapse_root_endpoints();
}

AlgebraicReal AlgebraicReal::trusted(Polynomial poly, Rational lo, Rational hi) {
  return AlgebraicReal(Trusted{}, std::move(poly), std::move(lo), std::move(hi));
}

void AlgebraicReal::collapse_root_endpoints() {
  if (lo_ == hi_) return;
  if (poly_.sign_at(lo_) == 0) {
    hi_ = lo_;
  } else if (poly_.sign_at(hi_) == 0) {
    lo_ = hi_;
  }
}

AlgebraicReal AlgebraicReal::bisected() const {
  if (is_rational()) return *this;
  const Rational mid = (lo_ + hi_) / 2;
  const int s_mid = poly_.sign_at(mid);
  if (s_mid == 0) return trusted(poly_, mid, mid);
  if (poly_.sign_at(lo_) == s_mid) return trusted(poly_, mid, hi_);
  return trusted(poly_, lo_, mid);
}

AlgebraicReal AlgebraicReal::refined(const Rational& max_width) const {
  AlgebraicReal out = *this;
  while (out.width() > max_width) {
    // Try a window of width max_width / 8 around the secant estimate; fall
    // back to bisection when the root is not inside it.
    const Rational flo = out.poly_(out.lo_);
    const Rational fhi = out.poly_(out.hi_);
    const Rational delta = max_width / 16;
    const auto bits = static_cast<unsigned>(mpz_sizeinbase(Integer(delta.get_den() / delta.get_num() + 1).get_mpz_t(), 2) + 2);
    const Rational m = round_dyadic(Rational(out.lo_ - flo * out.width() / (fhi - flo)), bits);
    const Rational a = std::max(out.lo_, Rational(m - delta));
    const Rational b = std::min(out.hi_, Rational(m + delta));
    if (a < b) {
      const int sa = out.poly_.sign_at(a);
      const int sb = out.poly_.sign_at(b);
      if (sa == 0) return trusted(out.poly_, a, a);
      if (sb == 0) return trusted(out.poly_, b, b);
      if (sa != sb) {
        out = trusted(out.poly_, a, b);
        continue;
      }
    }
    out = out.bisected();
  }
  return out;
}

int AlgebraicReal::sign() const {
  if (lo_ > 0) return 1;
  if (hi_ < 0) return -1;
  if (poly_.sign_at(0) == 0) return 0;
  // 0 lies strictly inside the interval and is not the root
  AlgebraicReal r = *this;
  while (r.lo() < 0 && r.hi() > 0) r = r.bisected();
  return r.lo() >= 0 ? (r.hi() == 0 ? 0 : 1) : -1;
}

double AlgebraicReal::approx() const {
  return refined(Rational(pow(Rational(1, 2), 52) * (1 + abs(lo_)))).lo().get_d();
}

std::string AlgebraicReal::to_string() const {
  std::ostringstream os;
  os << "root of " << rup::to_string(poly_) << " in [" << rup::to_string(lo_) << ", "
     << rup::to_string(hi_) << "]";
  return os.str();
}

std::strong_ordering compare_algebraic(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.hi() < b.lo()) return std::strong_ordering::less;
  if (b.hi() < a.lo()) return std::strong_ordering::greater;
  // two points that are not separated coincide
  if (a.is_rational() && b.is_rational()) return std::strong_ordering::equal;
  // Both intervals meet. The common root of the defining polynomials inside
  // the overlap, if any, is necessarily both a and b.
  const Polynomial g = poly_gcd(a.poly(), b.poly());
  if (g.degree() >= 1) {
    const Rational lo = std::max(a.lo(), b.lo());
    const Rational hi = std::min(a.hi(), b.hi());
    if (SturmSequence(g).count_roots(lo, hi) > 0) return std::strong_ordering::equal;
  }
  AlgebraicReal x = a;
  AlgebraicReal y = b;
  while (!(x.hi() < y.lo() || y.hi() < x.lo())) {
    if (x.width() >= y.width()) {
      x = x.bisected();
    } else {
      y = y.bisected();
    }
  }
  return x.hi() < y.lo() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering compare_algebraic(const AlgebraicReal& a, const Rational& b) {
  return compare_algebraic(a, AlgebraicReal(b));
}

int sign_at(const Polynomial& p, const AlgebraicReal& a) {
  if (p.is_zero()) return 0;
  if (a.is_rational()) return p.sign_at(a.lo());
  const Polynomial g = poly_gcd(p, a.poly());
  if (g.degree() >= 1 && SturmSequence(g).count_roots(a.lo(), a.hi()) > 0) return 0;
  if (p.degree() < 1) return sgn(p.leading());
  const SturmSequence sturm(squarefree_part(p));
  AlgebraicReal r = a;
  while (sturm.count_roots(r.lo(), r.hi()) > 0) r = r.bisected();
  return p.sign_at(r.lo());
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval square(const Interval& a) {
  if (a.lo >= 0) return {a.lo * a.lo, a.hi * a.hi};
  if (a.hi <= 0) return {a.hi * a.hi, a.lo * a.lo};
  return {Rational(0), std::max(a.lo * a.lo, a.hi * a.hi)};
}

Interval scale(const Interval& a, const Rational& c) {
  if (c >= 0) return {a.lo * c, a.hi * c};
  return {a.hi * c, a.lo * c};
}

std::optional<AlgebraicReal> isolate_in(const Polynomial& defining, const Interval& enclosure) {
  const Polynomial sf = squarefree_part(defining);
  if (sf.degree() < 1) return std::nullopt;
  if (SturmSequence(sf).count_roots(enclosure.lo, enclosure.hi) != 1) return std::nullopt;
  return AlgebraicReal::trusted(sf, enclosure.lo, enclosure.hi);
}

}  // namespace rup
