#include "rup/algebra/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rup/errors.hpp"

namespace rup {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial out = constant(1);
  for (const auto& r : roots) out *= Polynomial({-r, 1});
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw DegenerateInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& z) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Polynomial Polynomial::reversed() const {
  std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(r));
}

Polynomial Polynomial::shifted(const Rational& shift) const {
  // Horner in polynomial arithmetic: p(z + s)
  Polynomial out;
  const Polynomial lin({shift, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out *= lin;
    out += constant(*it);
  }
  return out;
}

Polynomial Polynomial::scaled(const Rational& scale) const {
  Polynomial out = *this;
  Rational f = 1;
  for (auto& c : out.coeffs_) {
    c *= f;
    f *= scale;
  }
  out.trim();
  return out;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Integer(v / content));
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial out = Polynomial::constant(1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) out *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DegenerateInput("polynomial division by zero");
  if (num.degree() < den.degree()) return {Polynomial{}, num};
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size();
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational inv_lc = 1 / d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + dn - 1] * inv_lc;
    if (q != 0) {
      for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * d[j];
    }
    quot[k] = std::move(q);
  }
  rem.resize(dn - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

bool divides(const Polynomial& d, const Polynomial& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).second.is_zero();
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
  Polynomial a = p.monic();
  Polynomial b = q.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw DegenerateInput("square-free decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  const Polynomial dp = p.derivative();
  Polynomial a = poly_gcd(p, dp);
  Polynomial b = exact_quotient(p, a);
  Polynomial c = exact_quotient(dp, a);
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial g = poly_gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw DegenerateInput("square-free part of the zero polynomial");
  if (p.degree() <= 0) return Polynomial::constant(1);
  return exact_quotient(p, poly_gcd(p, p.derivative())).monic();
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) os << "-";
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << to_string(mag);
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace rup
