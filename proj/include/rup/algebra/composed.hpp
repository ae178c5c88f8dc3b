#pragma once

#include <vector>

#include "rup/algebra/algebraic_real.hpp"
#include "rup/algebra/complex_roots.hpp"
#include "rup/algebra/polynomial.hpp"

namespace rup {

/// Res(a, b) by the Euclidean remainder sequence over Q, using the true
/// degrees of a and b. Zero if either argument is zero.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// Polynomial through (x_i, y_i), x_i distinct (Newton divided differences).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Monic polynomial of degree m^2 whose roots are lambda_i * lambda_j over all
/// ordered pairs of roots of p (with multiplicity): Res_y(p(y), y^m p(x/y))
/// after making p monic, evaluated at m^2 + 1 points and interpolated.
Polynomial composed_product(const Polynomial& p);

/// Monic polynomial of degree m^2 whose roots are lambda_i + lambda_j over
/// all ordered pairs: Res_y(p(y), p(x - y)).
Polynomial composed_sum(const Polynomial& p);

/// |lambda|^2 = lambda * conj(lambda) for the root held by `box`. The defining
/// polynomial is the square-free part of composed_product(box.factor), which
/// divides the composed product of the square-free part of the whole
/// polynomial.
AlgebraicReal modulus_squared(const RootBox& box);
/// As above, checking that the box's factor divides p.
AlgebraicReal modulus_squared(const RootBox& box, const Polynomial& p);

/// 2 Re(lambda) = lambda + conj(lambda), defined through composed_sum.
AlgebraicReal real_part_doubled(const RootBox& box);
AlgebraicReal real_part_doubled(const RootBox& box, const Polynomial& p);

}  // namespace rup
