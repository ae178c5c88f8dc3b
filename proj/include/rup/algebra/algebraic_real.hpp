#pragma once

#include <compare>
#include <optional>
#include <string>

#include "rup/algebra/polynomial.hpp"

namespace rup {

/// A real algebraic number: the unique root of a square-free polynomial in a
/// closed rational interval [lo, hi]. When lo == hi the number is that
/// rational. Otherwise neither endpoint is a root, so the polynomial changes
/// sign across the interval. Values are immutable; refinement returns a new
/// object.
class AlgebraicReal {
 public:
  /// Validates that `poly` is square-free and has exactly one real root in
  /// [lo, hi]; throws PreconditionError otherwise. The stored polynomial is
  /// made monic.
  AlgebraicReal(Polynomial poly, Rational lo, Rational hi);
  explicit AlgebraicReal(const Rational& value);

  /// Skips validation. For callers that have already certified isolation.
  static AlgebraicReal trusted(Polynomial poly, Rational lo, Rational hi);

  const Polynomial& poly() const noexcept { return poly_; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  bool is_rational() const noexcept { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }

  AlgebraicReal bisected() const;
  AlgebraicReal refined(const Rational& max_width) const;
  /// Sign of the number itself.
  int sign() const;
  double approx() const;
  std::string to_string() const;

 private:
  struct Trusted {};
  AlgebraicReal(Trusted, Polynomial poly, Rational lo, Rational hi);
  void collapse_root_endpoints();

  Polynomial poly_;
  Rational lo_;
  Rational hi_;
};

/// Exact comparison. Equality is decided through gcd of the defining
/// polynomials; otherwise both intervals are bisected until they separate.
std::strong_ordering compare_algebraic(const AlgebraicReal& a, const AlgebraicReal& b);
std::strong_ordering compare_algebraic(const AlgebraicReal& a, const Rational& b);

/// Exact sign of p at a; zero iff a is a root of p.
int sign_at(const Polynomial& p, const AlgebraicReal& a);

/// Interval arithmetic helpers over closed rational intervals.
struct Interval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval square(const Interval& a);
Interval scale(const Interval& a, const Rational& c);

/// Builds the algebraic number that is the unique root of `defining` (any
/// nonzero polynomial) inside `enclosure`, provided exactly one distinct root
/// of `defining` lies there. Returns std::nullopt when the enclosure holds zero
/// or several distinct roots.
std::optional<AlgebraicReal> isolate_in(const Polynomial& defining, const Interval& enclosure);

}  // namespace rup
