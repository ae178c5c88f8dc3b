#include "rup/algebra/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace rup {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(Integer(std::string(num)));
    return q;
  }
  const auto den = text.substr(slash + 1);
  if (den.empty() || den.front() == '-' || !is_integer_literal(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q = Rational(Integer(std::string(num)), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // (p/q)^e stays reduced; only a negative base can flip sign handling.
  out.canonicalize();
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational round_up_dyadic(const Rational& q, unsigned bits) {
  Integer scaled = q.get_num();
  scaled <<= bits;
  Integer m;
  mpz_cdiv_q(m.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  Rational out(m);
  out /= Rational(Integer(1) << bits);
  return out;
}

Rational round_dyadic(const Rational& q, unsigned bits) {
  Integer scaled = q.get_num();
  scaled <<= bits + 1;
  Integer m;
  mpz_fdiv_q(m.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  // m = floor(2q * 2^bits); round half up on the doubled grid
  m += 1;
  m >>= 1;
  Rational out(m);
  out /= Rational(Integer(1) << bits);
  return out;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  Rational out(value);
  return out;
}

}  // namespace rup
