#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rup/algebra/algebraic_real.hpp"
#include "rup/algebra/polynomial.hpp"

namespace rup {

/// A closed axis-parallel rectangle holding exactly one distinct complex root
/// of `factor`, a square-free factor of the polynomial being isolated.
///
/// Real roots get a degenerate box (im = [0, 0]) whose re-interval isolates
/// the root as an AlgebraicReal of `factor`. Nonreal boxes never meet the real
/// axis, and the boxes of a real polynomial come in conjugate pairs.
struct RootBox {
  Interval re;
  Interval im;
  int multiplicity = 1;
  bool real = false;
  Polynomial factor;
  /// Position of `factor` in the factor list given to the isolator.
  std::size_t factor_index = 0;

  Rational width() const { return std::max(re.width(), im.width()); }
};

/// Boxes for every distinct root of p, multiplicities from the square-free
/// decomposition. Real roots first (ascending), then nonreal roots. Throws
/// DegenerateInput for constant or zero p.
std::vector<RootBox> isolate_complex_roots(const Polynomial& p);

/// Same, for an explicit list of pairwise coprime square-free factors; each
/// box records which factor it came from.
std::vector<RootBox> isolate_complex_roots(std::span<const SquarefreeFactor> factors);

/// Shrinks a box to width <= max_width around the same root.
RootBox refine(const RootBox& box, const Rational& max_width);

/// The real root held by a real box.
AlgebraicReal real_value(const RootBox& box);

bool boxes_disjoint(const RootBox& a, const RootBox& b);
bool box_contains(const RootBox& outer, const RootBox& inner);

}  // namespace rup
