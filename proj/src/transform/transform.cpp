#include "rup/transform/transform.hpp"

#include "rup/errors.hpp"

namespace rup {

namespace {

Rational coefficient_or_one(const Instance& inst, std::size_t i) {
  return i < inst.order() ? inst.coefficients()[i] : Rational(1);
}

}  // namespace

Polynomial z_numerator(const Instance& inst) {
  require_mode(inst, Mode::Discrete);
  const std::size_t k = inst.order();
  const auto& u = inst.initial();
  std::vector<Rational> psi(k + 1);
  for (std::size_t i = 1; i <= k; ++i) {
    const Rational ci = coefficient_or_one(inst, i);
    if (ci == 0) continue;
    for (std::size_t j = 0; j < i; ++j) psi[i - j] += ci * u[j];
  }
  return Polynomial(std::move(psi));
}

Polynomial laplace_numerator(const Instance& inst) {
  require_mode(inst, Mode::Continuous);
  const std::size_t k = inst.order();
  const auto& v = inst.initial();
  std::vector<Rational> phi(k);
  for (std::size_t i = 1; i <= k; ++i) {
    const Rational ci = coefficient_or_one(inst, i);
    if (ci == 0) continue;
    for (std::size_t j = 1; j <= i; ++j) phi[i - j] += ci * v[j - 1];
  }
  return Polynomial(std::move(phi));
}

Polynomial transform_numerator(const Instance& inst) {
  return inst.mode() == Mode::Discrete ? z_numerator(inst) : laplace_numerator(inst);
}

std::vector<Rational> series_expand(const Polynomial& num, const Polynomial& den, std::size_t n_terms) {
  if (den.is_zero() || den.leading() != 1) throw PreconditionError("series_expand needs a monic denominator");
  if (num.degree() > den.degree()) throw PreconditionError("series_expand needs deg num <= deg den");
  const int d = den.degree();
  // w = 1/z: num/den = N(w)/R(w) with R(0) = 1
  std::vector<Rational> out(n_terms);
  for (std::size_t n = 0; n < n_terms; ++n) {
    Rational acc = static_cast<int>(n) <= d ? num.coeff(d - n) : Rational(0);
    for (int j = 1; j <= d && static_cast<std::size_t>(j) <= n; ++j) acc -= den.coeff(d - j) * out[n - j];
    out[n] = std::move(acc);
  }
  return out;
}

}  // namespace rup
