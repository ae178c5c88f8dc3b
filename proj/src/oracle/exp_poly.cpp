#include "rup/oracle/exp_poly.hpp"

#include <cmath>
#include <set>

#include "rup/errors.hpp"

namespace rup {

Basis basis_for(Mode mode) { return mode == Mode::Discrete ? Basis::Binomial : Basis::Monomial; }

std::size_t ExponentialPolynomial::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& t : terms) total += t.multiplicity();
  return total;
}

const SpectrumTerm* ExponentialPolynomial::maximal_root() const {
  const SpectrumTerm* best = nullptr;
  for (const auto& t : terms) {
    if (best == nullptr || t.root > best->root) best = &t;
  }
  return best;
}

namespace {

void validate(const ExponentialPolynomial& spec) {
  if (spec.terms.empty()) throw PreconditionError("empty spectrum");
  std::set<Rational> seen;
  for (const auto& t : spec.terms) {
    if (t.coeffs.empty()) throw PreconditionError("root " + to_string(t.root) + " has multiplicity 0");
    if (!seen.insert(t.root).second) throw PreconditionError("duplicate root " + to_string(t.root));
  }
}

// lambda^e with 0^0 = 1
Rational power(const Rational& lambda, unsigned long e) { return pow(lambda, static_cast<unsigned>(e)); }

}  // namespace

Instance construct_from_spectrum(const ExponentialPolynomial& spec, Mode mode) {
  validate(spec);
  if (spec.basis != basis_for(mode)) throw PreconditionError("basis does not match mode");
  const std::size_t k = spec.total_multiplicity();

  Polynomial chi = Polynomial::constant(1);
  for (const auto& t : spec.terms) chi *= pow(Polynomial{Rational(-t.root), Rational(1)}, static_cast<unsigned>(t.multiplicity()));
  std::vector<Rational> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = chi.coeff(i);

  std::vector<Rational> v(k);
  if (mode == Mode::Discrete) {
    for (std::size_t n = 0; n < k; ++n) v[n] = eval_exp_poly(spec, n);
  } else {
    // d-th derivative at 0 of t^j e^(lambda t) is C(d, j) j! lambda^(d-j)
    for (std::size_t d = 0; d < k; ++d) {
      for (const auto& t : spec.terms) {
        for (std::size_t j = 0; j < t.coeffs.size() && j <= d; ++j) {
          const auto du = static_cast<unsigned>(d);
          const auto ju = static_cast<unsigned>(j);
          v[d] += t.coeffs[j] * Rational(binomial(du, ju) * factorial(ju)) * power(t.root, d - j);
        }
      }
    }
  }
  return Instance(mode, std::move(c), std::move(v));
}

Rational eval_exp_poly(const ExponentialPolynomial& spec, unsigned long n) {
  Rational total = 0;
  for (const auto& t : spec.terms) {
    Rational block = 0;
    for (std::size_t j = 0; j < t.coeffs.size(); ++j) {
      const auto ju = static_cast<unsigned>(j);
      block += t.coeffs[j] * Rational(binomial(static_cast<unsigned>(n) + ju, ju));
    }
    total += block * power(t.root, n);
  }
  return total;
}

long double eval_exp_poly_at(const ExponentialPolynomial& spec, long double t) {
  long double total = 0;
  for (const auto& term : spec.terms) {
    long double block = 0;
    long double tj = 1;
    for (const auto& b : term.coeffs) {
      block += static_cast<long double>(b.get_d()) * tj;
      tj *= t;
    }
    total += block * std::exp(static_cast<long double>(term.root.get_d()) * t);
  }
  return total;
}

}  // namespace rup
