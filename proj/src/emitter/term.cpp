#include "rup/emitter/term.hpp"

#include <sstream>
#include <stdexcept>

namespace rup::fo {

namespace {

Term::Monomial multiply(const Term::Monomial& a, const Term::Monomial& b) {
  Term::Monomial out;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

void accumulate(std::map<Term::Monomial, Rational>& terms, const Term::Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

Term::Term(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Term Term::variable(const std::string& name) {
  Term t;
  t.terms_.emplace(Monomial{{name, 1}}, Rational(1));
  return t;
}

bool Term::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational Term::constant_value() const {
  if (!is_constant()) throw std::logic_error("term is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::set<std::string> Term::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m) out.insert(v);
  }
  return out;
}

Term Term::substitute(const std::map<std::string, Rational>& values) const {
  Term out;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    Rational coeff = c;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest.emplace_back(v, e);
      } else {
        coeff *= rup::pow(it->second, e);
      }
    }
    accumulate(out.terms_, rest, coeff);
  }
  return out;
}

Term& Term::operator+=(const Term& rhs) {
  for (const auto& [m, c] : rhs.terms_) accumulate(terms_, m, c);
  return *this;
}

Term& Term::operator-=(const Term& rhs) {
  for (const auto& [m, c] : rhs.terms_) accumulate(terms_, m, -c);
  return *this;
}

Term& Term::operator*=(const Term& rhs) {
  std::map<Monomial, Rational> out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) accumulate(out, multiply(ma, mb), ca * cb);
  }
  terms_ = std::move(out);
  return *this;
}

Term Term::operator-() const {
  Term out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Term pow(const Term& base, unsigned exponent) {
  Term out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

Term evaluate_poly(const std::vector<Term>& coeffs, const Term& at) {
  Term acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

std::vector<Term> convolve(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Term> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::string to_smtlib(const Rational& c) {
  const Rational mag = abs(c);
  std::string body = mag.get_den() == 1 ? mag.get_num().get_str()
                                         : "(/ " + mag.get_num().get_str() + " " + mag.get_den().get_str() + ")";
  return c < 0 ? "(- " + body + ")" : body;
}

std::string to_smtlib(const Term& t) {
  if (t.is_zero()) return "0";
  std::vector<std::string> summands;
  for (const auto& [m, c] : t.terms()) {
    std::vector<std::string> factors;
    if (c != 1 || m.empty()) factors.push_back(to_smtlib(c));
    for (const auto& [v, e] : m) {
      for (unsigned i = 0; i < e; ++i) factors.push_back(v);
    }
    if (factors.size() == 1) {
      summands.push_back(factors.front());
    } else {
      std::string s = "(*";
      for (const auto& f : factors) s += " " + f;
      summands.push_back(s + ")");
    }
  }
  if (summands.size() == 1) return summands.front();
  std::string s = "(+";
  for (const auto& x : summands) s += " " + x;
  return s + ")";
}

}  // namespace rup::fo
