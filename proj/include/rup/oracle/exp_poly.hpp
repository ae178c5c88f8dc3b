#pragma once

#include <vector>

#include "rup/lds/instance.hpp"

namespace rup {

/// How the polynomial coefficient of each exponential is read:
///   Binomial:  sum_j b_j C(n+j, j) lambda^n   (recurrences)
///   Monomial:  sum_j b_j t^j e^(lambda t)     (ODEs)
enum class Basis { Binomial, Monomial };

Basis basis_for(Mode mode);

struct SpectrumTerm {
  Rational root;
  std::vector<Rational> coeffs;  // size = multiplicity

  std::size_t multiplicity() const { return coeffs.size(); }
};

/// Closed form over a rational spectrum.
struct ExponentialPolynomial {
  std::vector<SpectrumTerm> terms;
  Basis basis = Basis::Binomial;

  std::size_t total_multiplicity() const;
  /// The term with the largest root, or nullptr if there are no terms.
  const SpectrumTerm* maximal_root() const;
};

/// The instance whose solution is `spec`: chi = prod (z - root)^m and v the
/// first k values (or derivatives at 0). Throws PreconditionError for
/// duplicate roots, empty coefficient blocks, an empty spectrum, or a basis
/// that does not belong to `mode`.
Instance construct_from_spectrum(const ExponentialPolynomial& spec, Mode mode);

/// Exact value at index n (binomial basis).
Rational eval_exp_poly(const ExponentialPolynomial& spec, unsigned long n);
/// Value at time t (monomial basis), in long double.
long double eval_exp_poly_at(const ExponentialPolynomial& spec, long double t);

}  // namespace rup
