#include "rup/algebra/real_roots.hpp"

#include <algorithm>

#include "rup/errors.hpp"

namespace rup {

namespace {

Polynomial normalize_positive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Polynomial out = p.primitive();
  // primitive() forces a positive leading coefficient; undo that if needed so
  // only a positive factor is removed.
  if (sgn(p.leading()) < 0) out = -out;
  return out;
}

int count_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void bisect(const SturmSequence& sturm, const Rational& lo, const Rational& hi, int count,
            std::vector<AlgebraicReal>& out) {
  // invariant: `count` roots in the half-open interval (lo, hi]
  if (count == 0) return;
  const Polynomial& p = sturm.base();
  if (count == 1) {
    if (p.sign_at(hi) == 0) {
      out.push_back(AlgebraicReal::trusted(p, hi, hi));
      return;
    }
    if (p.sign_at(lo) != 0) {
      out.push_back(AlgebraicReal::trusted(p, lo, hi));
      return;
    }
  }
  const Rational mid = (lo + hi) / 2;
  const int left = sturm.variations_at(lo) - sturm.variations_at(mid);
  bisect(sturm, lo, mid, left, out);
  bisect(sturm, mid, hi, count - left, out);
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& squarefree) {
  if (squarefree.is_zero()) throw DegenerateInput("Sturm sequence of the zero polynomial");
  chain_.push_back(normalize_positive(squarefree));
  Polynomial next = normalize_positive(squarefree.derivative());
  while (!next.is_zero()) {
    chain_.push_back(next);
    Polynomial rem = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    next = normalize_positive(-rem);
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) {
    int s = sgn(q.leading());
    signs.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
  return count_variations(signs);
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  const int at_lo = base().sign_at(lo) == 0 ? 1 : 0;
  if (lo == hi) return at_lo;
  return variations_at(lo) - variations_at(hi) + at_lo;
}

int SturmSequence::count_all_roots() const {
  return variations_at_minus_infinity() - variations_at_plus_infinity();
}

Rational root_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational max_ratio = 0;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i)) / lc;
    if (r > max_ratio) max_ratio = r;
  }
  const Rational cauchy = 1 + max_ratio;
  Rational bound = 1;
  while (bound <= cauchy) bound *= 2;
  return bound;
}

std::vector<AlgebraicReal> isolate_squarefree_real_roots(const Polynomial& squarefree) {
  std::vector<AlgebraicReal> out;
  if (squarefree.degree() < 1) return out;
  const SturmSequence sturm(squarefree);
  const Rational bound = root_bound(squarefree);
  bisect(sturm, -bound, bound, sturm.count_all_roots(), out);
  return out;
}

std::vector<RealRoot> isolate_real_roots(const Polynomial& p) {
  const auto factors = squarefree_decomposition(p);
  Polynomial product = Polynomial::constant(1);
  for (const auto& f : factors) product *= f.factor;

  std::vector<RealRoot> out;
  for (const auto& root : isolate_squarefree_real_roots(product)) {
    for (const auto& f : factors) {
      const SturmSequence sturm(f.factor);
      if (sturm.count_roots(root.lo(), root.hi()) == 1) {
        out.push_back({AlgebraicReal::trusted(f.factor, root.lo(), root.hi()), f.multiplicity});
        break;
      }
    }
  }
  return out;
}

}  // namespace rup
