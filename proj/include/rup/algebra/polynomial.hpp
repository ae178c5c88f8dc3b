#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rup/algebra/rational.hpp"

namespace rup {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  static Polynomial constant(const Rational& c);
  /// The monomial c*z^degree.
  static Polynomial monomial(const Rational& c, unsigned degree);
  /// prod (z - r) over `roots`.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of z^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& z) const;
  int sign_at(const Rational& z) const { return sgn((*this)(z)); }

  Polynomial derivative() const;
  Polynomial monic() const;
  /// z^deg * p(1/z).
  Polynomial reversed() const;
  /// p(z + shift).
  Polynomial shifted(const Rational& shift) const;
  /// p(scale * z).
  Polynomial scaled(const Rational& scale) const;
  /// Same roots, integer coefficients with content 1 and positive leading
  /// coefficient.
  Polynomial primitive() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Quotient and remainder; throws DegenerateInput on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// num / den, throwing std::logic_error when the division is not exact.
Polynomial exact_quotient(const Polynomial& num, const Polynomial& den);
bool divides(const Polynomial& d, const Polynomial& p);

/// Monic gcd. gcd(p, 0) = monic(p); both zero throws DegenerateInput.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

struct SquarefreeFactor {
  Polynomial factor;  // monic, square-free, degree >= 1
  int multiplicity;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm. Factors are pairwise coprime, ordered by increasing
/// multiplicity, and their product (with multiplicities) equals p up to a
/// constant. Throws DegenerateInput on the zero polynomial.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

std::string to_string(const Polynomial& p, const std::string& var = "z");
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace rup
