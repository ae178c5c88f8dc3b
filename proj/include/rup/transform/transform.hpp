#pragma once

#include <vector>

#include "rup/algebra/polynomial.hpp"
#include "rup/lds/instance.hpp"

namespace rup {

/// psi_{c,v}(z) with Z[u](z) = psi(z) / chi(z):
///   psi(z) = sum_{i=1..k} c_i sum_{j=0..i-1} u[j] z^{i-j},   c_k = 1.
/// Constant term 0; coefficient of z^k is u[0].
Polynomial z_numerator(const Instance& inst);

/// phi_{c,v}(z) with L[u](z) = phi(z) / chi(z):
///   phi(z) = sum_{i=1..k} c_i sum_{j=1..i} z^{i-j} u^(j-1)(0),   c_k = 1.
Polynomial laplace_numerator(const Instance& inst);

/// z_numerator or laplace_numerator according to the instance's mode.
Polynomial transform_numerator(const Instance& inst);

/// First n_terms coefficients of num/den expanded in powers of 1/z.
/// Requires den monic and deg num <= deg den (PreconditionError otherwise).
std::vector<Rational> series_expand(const Polynomial& num, const Polynomial& den, std::size_t n_terms);

}  // namespace rup
