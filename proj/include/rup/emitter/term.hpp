#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rup/algebra/rational.hpp"

namespace rup::fo {

/// Polynomial expression over Q in named real variables, kept in canonical
/// sparse form (monomial -> nonzero coefficient), so structurally equal terms
/// compare equal.
class Term {
 public:
  /// Sorted (variable, exponent) pairs; the empty monomial is the constant 1.
  using Monomial = std::vector<std::pair<std::string, unsigned>>;

  Term() = default;
  Term(const Rational& c);  // NOLINT: constants convert implicitly
  Term(int c) : Term(Rational(c)) {}  // NOLINT

  static Term variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Requires is_constant().
  Rational constant_value() const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::set<std::string> variables() const;

  /// Replaces the given variables by rational values.
  Term substitute(const std::map<std::string, Rational>& values) const;

  Term& operator+=(const Term& rhs);
  Term& operator-=(const Term& rhs);
  Term& operator*=(const Term& rhs);
  friend Term operator+(Term a, const Term& b) { return a += b; }
  friend Term operator-(Term a, const Term& b) { return a -= b; }
  friend Term operator*(Term a, const Term& b) { return a *= b; }
  Term operator-() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::map<Monomial, Rational> terms_;
};

Term pow(const Term& base, unsigned exponent);

/// sum_i coeffs[i] * at^i
Term evaluate_poly(const std::vector<Term>& coeffs, const Term& at);

/// Coefficients of the product of two coefficient vectors (polynomial
/// multiplication, a.k.a. convolution).
std::vector<Term> convolve(const std::vector<Term>& a, const std::vector<Term>& b);

std::string to_smtlib(const Rational& c);
std::string to_smtlib(const Term& t);

}  // namespace rup::fo
