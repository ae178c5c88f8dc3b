#pragma once

#include <vector>

#include "rup/algebra/algebraic_real.hpp"
#include "rup/algebra/polynomial.hpp"

namespace rup {

/// Sturm sequence of a square-free polynomial. Each member is stored with a
/// positive rescaling, which leaves sign variations unchanged.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);

  int variations_at(const Rational& x) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;

  /// Distinct roots in the closed interval [lo, hi] (lo <= hi).
  int count_roots(const Rational& lo, const Rational& hi) const;
  int count_all_roots() const;

  const Polynomial& base() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

/// Power of two strictly larger than the modulus of every complex root.
Rational root_bound(const Polynomial& p);

struct RealRoot {
  AlgebraicReal value;
  int multiplicity;
};

/// One entry per distinct real root, ascending, with pairwise disjoint
/// isolating intervals. Each root's defining polynomial is the square-free
/// factor of p it belongs to. Throws DegenerateInput for p = 0.
std::vector<RealRoot> isolate_real_roots(const Polynomial& p);

/// Distinct real roots of a square-free polynomial, ascending, each defined by
/// `squarefree` itself.
std::vector<AlgebraicReal> isolate_squarefree_real_roots(const Polynomial& squarefree);

}  // namespace rup
