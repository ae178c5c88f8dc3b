#include "rup/algebra/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "rup/algebra/real_roots.hpp"
#include "rup/errors.hpp"

namespace rup {

namespace {

// Complex number with rational parts; approximations are kept on a dyadic
// grid so their size stays proportional to the working precision.
struct ComplexQ {
  Rational re;
  Rational im;

  ComplexQ operator+(const ComplexQ& o) const { return {re + o.re, im + o.im}; }
  ComplexQ operator-(const ComplexQ& o) const { return {re - o.re, im - o.im}; }
  ComplexQ operator*(const ComplexQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Rational norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  ComplexQ operator/(const ComplexQ& o) const {
    const Rational n = o.norm();
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  ComplexQ rounded(unsigned bits) const { return {round_dyadic(re, bits), round_dyadic(im, bits)}; }
};

// p(z) and p'(z) by a single Horner pass.
std::pair<ComplexQ, ComplexQ> eval_with_derivative(const Polynomial& p, const ComplexQ& z) {
  ComplexQ value{0, 0};
  ComplexQ deriv{0, 0};
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + ComplexQ{*it, 0};
  }
  return {value, deriv};
}

// ceil(sqrt(q)) on the 2^-bits grid, an exact upper bound.
Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q <= 0) return Rational(0);
  Rational scaled = q;
  scaled *= Rational(Integer(1) << (2 * bits));
  Integer n;
  mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  if (s * s < n) s += 1;
  Rational out(s);
  out /= Rational(Integer(1) << bits);
  return out;
}

std::vector<ComplexQ> initial_guesses(const Polynomial& f) {
  const int n = f.degree();
  const double radius = root_bound(f).get_d() / 2;
  std::vector<ComplexQ> z;
  z.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 0.4 + 2 * std::numbers::pi * k / n;
    ComplexQ g{from_double(radius * std::cos(angle)), from_double(radius * std::sin(angle))};
    z.push_back(g.rounded(30));
  }
  return z;
}

// Aberth-Ehrlich iteration, Gauss-Seidel style, with every iterate rounded to
// the 2^-bits grid. Stops when all corrections fall below the grid or after a
// fixed iteration budget.
void aberth(const Polynomial& f, std::vector<ComplexQ>& z, unsigned bits) {
  const std::size_t n = z.size();
  const Rational tiny = Rational(1) / Rational(Integer(1) << bits);
  const Rational stop = tiny * tiny * 256;
  const int budget = 60 + 10 * static_cast<int>(n);
  for (int iter = 0; iter < budget; ++iter) {
    Rational worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto [value, deriv] = eval_with_derivative(f, z[i]);
      if (value.is_zero()) continue;
      if (deriv.is_zero()) {
        z[i] = z[i] + ComplexQ{tiny * 3, tiny * 5};
        worst = std::max(worst, Rational(1));
        continue;
      }
      const ComplexQ w = value / deriv;
      ComplexQ repulsion{0, 0};
      bool collided = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const ComplexQ diff = z[i] - z[j];
        if (diff.is_zero()) {
          collided = true;
          break;
        }
        repulsion = repulsion + ComplexQ{1, 0} / diff;
      }
      if (collided) {
        z[i] = z[i] + ComplexQ{tiny * 7, -tiny * 3};
        worst = std::max(worst, Rational(1));
        continue;
      }
      const ComplexQ denom = ComplexQ{1, 0} - w * repulsion;
      const ComplexQ step = denom.is_zero() ? w : w / denom;
      z[i] = (z[i] - step).rounded(bits);
      worst = std::max(worst, step.norm());
    }
    if (worst <= stop) break;
  }
}

RootBox real_box(const AlgebraicReal& root, const Polynomial& factor, int multiplicity,
                 std::size_t index) {
  RootBox box;
  box.re = {root.lo(), root.hi()};
  box.im = {Rational(0), Rational(0)};
  box.multiplicity = multiplicity;
  box.real = true;
  box.factor = factor;
  box.factor_index = index;
  return box;
}

// Boxes for the nonreal roots of square-free f, given approximations.
// Each chosen approximation z in the upper half plane carries the disk
// |w - z| <= deg(f) |f(z)/f'(z)|, which always contains a root. If those disks
// avoid the real axis and, padded to boxes, are pairwise disjoint, they and
// their conjugates hold 2s distinct nonreal roots, i.e. exactly one each.
std::optional<std::vector<RootBox>> certify_nonreal(const Polynomial& f, int real_count,
                                                    const std::vector<ComplexQ>& approx,
                                                    int multiplicity, std::size_t index,
                                                    unsigned bits) {
  const int n = f.degree();
  const int upper_count = (n - real_count) / 2;
  std::vector<RootBox> out;
  if (upper_count == 0) return out;

  std::vector<ComplexQ> upper = approx;
  std::sort(upper.begin(), upper.end(), [](const ComplexQ& a, const ComplexQ& b) { return a.im > b.im; });
  upper.resize(upper_count);

  const Rational pad(9, 8);
  std::vector<RootBox> boxes;
  for (const auto& z : upper) {
    if (z.im <= 0) return std::nullopt;
    auto [value, deriv] = eval_with_derivative(f, z);
    if (deriv.is_zero()) return std::nullopt;
    const Rational r2 = Rational(n * n) * value.norm() / deriv.norm();
    const Rational half = sqrt_upper(r2, bits + 16) * pad;
    if (z.im - half <= 0) return std::nullopt;
    RootBox box;
    box.re = {z.re - half, z.re + half};
    box.im = {z.im - half, z.im + half};
    box.multiplicity = multiplicity;
    box.factor = f;
    box.factor_index = index;
    for (const auto& other : boxes) {
      if (!boxes_disjoint(box, other)) return std::nullopt;
    }
    boxes.push_back(std::move(box));
  }
  for (auto& b : boxes) {
    RootBox conj = b;
    conj.im = {-b.im.hi, -b.im.lo};
    out.push_back(std::move(b));
    out.push_back(std::move(conj));
  }
  return out;
}

struct FactorState {
  Polynomial factor;
  int multiplicity;
  std::vector<AlgebraicReal> reals;
  std::vector<ComplexQ> approx;
};

constexpr unsigned kMaxBits = 1U << 15;

std::vector<RootBox> isolate_factors(std::span<const SquarefreeFactor> factors, unsigned start_bits) {
  std::vector<FactorState> states;
  for (const auto& f : factors) {
    if (f.factor.degree() < 1) throw DegenerateInput("cannot isolate roots of a constant factor");
    FactorState s{f.factor.monic(), f.multiplicity, isolate_squarefree_real_roots(f.factor), {}};
    if (s.factor.degree() > static_cast<int>(s.reals.size())) s.approx = initial_guesses(s.factor);
    states.push_back(std::move(s));
  }

  // Real roots of different factors are distinct; separate their intervals.
  std::vector<std::pair<AlgebraicReal*, std::size_t>> all_reals;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (auto& r : states[i].reals) all_reals.emplace_back(&r, i);
  }
  for (std::size_t a = 0; a < all_reals.size(); ++a) {
    for (std::size_t b = a + 1; b < all_reals.size(); ++b) {
      AlgebraicReal& x = *all_reals[a].first;
      AlgebraicReal& y = *all_reals[b].first;
      while (!(x.hi() < y.lo() || y.hi() < x.lo())) {
        if (x.width() >= y.width()) {
          x = x.bisected();
        } else {
          y = y.bisected();
        }
      }
    }
  }

  for (unsigned bits = start_bits; bits <= kMaxBits; bits *= 2) {
    std::vector<RootBox> nonreal;
    bool ok = true;
    for (std::size_t i = 0; i < states.size() && ok; ++i) {
      auto& s = states[i];
      if (s.approx.empty()) continue;
      aberth(s.factor, s.approx, bits);
      auto boxes = certify_nonreal(s.factor, static_cast<int>(s.reals.size()), s.approx, s.multiplicity, i, bits);
      if (!boxes) {
        ok = false;
        break;
      }
      for (auto& b : *boxes) {
        for (const auto& other : nonreal) {
          if (!boxes_disjoint(b, other)) ok = false;
        }
        nonreal.push_back(std::move(b));
      }
    }
    if (!ok) continue;

    std::vector<std::pair<AlgebraicReal, std::size_t>> reals;
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (const auto& r : states[i].reals) reals.emplace_back(r, i);
    }
    std::sort(reals.begin(), reals.end(),
              [](const auto& a, const auto& b) { return a.first.hi() < b.first.lo(); });
    std::vector<RootBox> out;
    for (const auto& [r, i] : reals) out.push_back(real_box(r, states[i].factor, states[i].multiplicity, i));
    std::sort(nonreal.begin(), nonreal.end(), [](const RootBox& a, const RootBox& b) {
      if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
      return a.im.lo < b.im.lo;
    });
    for (auto& b : nonreal) out.push_back(std::move(b));
    return out;
  }
  throw std::runtime_error("complex root isolation did not converge");
}

}  // namespace

bool boxes_disjoint(const RootBox& a, const RootBox& b) {
  return a.re.hi < b.re.lo || b.re.hi < a.re.lo || a.im.hi < b.im.lo || b.im.hi < a.im.lo;
}

bool box_contains(const RootBox& outer, const RootBox& inner) {
  return outer.re.lo <= inner.re.lo && inner.re.hi <= outer.re.hi && outer.im.lo <= inner.im.lo &&
         inner.im.hi <= outer.im.hi;
}

std::vector<RootBox> isolate_complex_roots(std::span<const SquarefreeFactor> factors) {
  return isolate_factors(factors, 64);
}

std::vector<RootBox> isolate_complex_roots(const Polynomial& p) {
  if (p.degree() < 1) throw DegenerateInput("root isolation needs a polynomial of degree >= 1");
  const auto factors = squarefree_decomposition(p);
  return isolate_complex_roots(std::span<const SquarefreeFactor>(factors));
}

AlgebraicReal real_value(const RootBox& box) {
  if (!box.real) throw PreconditionError("box does not hold a real root");
  return AlgebraicReal::trusted(box.factor, box.re.lo, box.re.hi);
}

RootBox refine(const RootBox& box, const Rational& max_width) {
  if (box.width() <= max_width) return box;
  if (box.real) {
    const AlgebraicReal r = real_value(box).refined(max_width);
    RootBox out = box;
    out.re = {r.lo(), r.hi()};
    return out;
  }
  // Any new box lying inside the old one holds a root of the same factor in
  // the old box, which is the old box's root.
  unsigned bits = 64;
  while (Rational(1) / Rational(Integer(1) << bits) > max_width / 64 && bits < kMaxBits) bits *= 2;
  const SquarefreeFactor single[] = {{box.factor, box.multiplicity}};
  for (; bits <= kMaxBits; bits *= 2) {
    for (auto& candidate : isolate_factors(single, bits)) {
      if (candidate.real || !box_contains(box, candidate)) continue;
      if (candidate.width() > max_width) break;
      candidate.factor_index = box.factor_index;
      return candidate;
    }
  }
  throw std::runtime_error("root box refinement did not converge");
}

}  // namespace rup
