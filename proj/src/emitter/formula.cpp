#include "rup/emitter/formula.hpp"

#include <algorithm>

namespace rup::fo {

Formula Formula::truth(bool value) {
  Formula f;
  f.kind_ = value ? Kind::True : Kind::False;
  return f;
}

Formula Formula::atom(Term term, Comparator cmp) {
  Formula f;
  f.kind_ = Kind::Atom;
  f.term_ = std::move(term);
  f.cmp_ = cmp;
  return f;
}

Formula Formula::negation(Formula inner) {
  Formula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(inner));
  return f;
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  Formula f;
  f.kind_ = Kind::And;
  f.children_ = std::move(parts);
  return f;
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  Formula f;
  f.kind_ = Kind::Or;
  f.children_ = std::move(parts);
  return f;
}

Formula Formula::implication(Formula premise, Formula conclusion) {
  Formula f;
  f.kind_ = Kind::Implies;
  f.children_ = {std::move(premise), std::move(conclusion)};
  return f;
}

Formula Formula::exists(std::vector<std::string> vars, Formula body) {
  Formula f;
  f.kind_ = Kind::Exists;
  f.bound_ = std::move(vars);
  f.children_.push_back(std::move(body));
  return f;
}

Formula Formula::forall(std::vector<std::string> vars, Formula body) {
  Formula f = exists(std::move(vars), std::move(body));
  f.kind_ = Kind::Forall;
  return f;
}

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> out;
  if (kind_ == Kind::Atom) return term_.variables();
  for (const auto& c : children_) {
    auto sub = c.free_variables();
    out.insert(sub.begin(), sub.end());
  }
  for (const auto& v : bound_) out.erase(v);
  return out;
}

Formula Formula::substitute(const std::map<std::string, Rational>& values) const {
  Formula out = *this;
  if (kind_ == Kind::Atom) {
    out.term_ = term_.substitute(values);
    return out;
  }
  auto inner = values;
  for (const auto& v : bound_) inner.erase(v);
  for (auto& c : out.children_) c = c.substitute(inner);
  return out;
}

namespace {

bool holds(const Rational& value, Comparator cmp) {
  switch (cmp) {
    case Comparator::Gt: return value > 0;
    case Comparator::Ge: return value >= 0;
    case Comparator::Eq: return value == 0;
    case Comparator::Ne: return value != 0;
    case Comparator::Lt: return value < 0;
    case Comparator::Le: return value <= 0;
  }
  return false;
}

bool is_true(const Formula& f) { return f.kind() == Formula::Kind::True; }
bool is_false(const Formula& f) { return f.kind() == Formula::Kind::False; }

}  // namespace

Formula Formula::simplified() const {
  switch (kind_) {
    case Kind::True:
    case Kind::False:
      return *this;
    case Kind::Atom:
      if (term_.is_constant()) return truth(holds(term_.constant_value(), cmp_));
      return *this;
    case Kind::Not: {
      Formula inner = children_.front().simplified();
      if (is_true(inner)) return truth(false);
      if (is_false(inner)) return truth(true);
      return negation(std::move(inner));
    }
    case Kind::And:
    case Kind::Or: {
      const bool is_and = kind_ == Kind::And;
      std::vector<Formula> kept;
      for (const auto& c : children_) {
        Formula s = c.simplified();
        if (is_and ? is_false(s) : is_true(s)) return truth(!is_and);
        if (is_and ? is_true(s) : is_false(s)) continue;
        kept.push_back(std::move(s));
      }
      if (kept.empty()) return truth(is_and);
      if (kept.size() == 1) return kept.front();
      return is_and ? conjunction(std::move(kept)) : disjunction(std::move(kept));
    }
    case Kind::Implies: {
      Formula premise = children_[0].simplified();
      Formula conclusion = children_[1].simplified();
      if (is_false(premise) || is_true(conclusion)) return truth(true);
      if (is_true(premise)) return conclusion;
      if (is_false(conclusion)) return negation(std::move(premise));
      return implication(std::move(premise), std::move(conclusion));
    }
    case Kind::Exists:
    case Kind::Forall: {
      Formula body = children_.front().simplified();
      if (is_true(body) || is_false(body)) return body;
      const auto used = body.free_variables();
      std::vector<std::string> vars;
      std::copy_if(bound_.begin(), bound_.end(), std::back_inserter(vars),
                   [&](const std::string& v) { return used.count(v) > 0; });
      if (vars.empty()) return body;
      Formula out = kind_ == Kind::Exists ? exists(std::move(vars), std::move(body))
                                          : forall(std::move(vars), std::move(body));
      return out;
    }
  }
  return *this;
}

namespace {

std::string comparator_smtlib(Comparator cmp) {
  switch (cmp) {
    case Comparator::Gt: return ">";
    case Comparator::Ge: return ">=";
    case Comparator::Eq: return "=";
    case Comparator::Ne: return "distinct";
    case Comparator::Lt: return "<";
    case Comparator::Le: return "<=";
  }
  return "=";
}

}  // namespace

std::string to_smtlib(const Formula& f, int indent) {
  using Kind = Formula::Kind;
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  switch (f.kind()) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Atom: return "(" + comparator_smtlib(f.comparator()) + " " + to_smtlib(f.term()) + " 0)";
    case Kind::Not: return "(not " + to_smtlib(f.children().front(), indent + 5) + ")";
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      std::string head = f.kind() == Kind::And ? "and" : (f.kind() == Kind::Or ? "or" : "=>");
      std::string s = "(" + head;
      for (const auto& c : f.children()) s += "\n" + pad + to_smtlib(c, indent + 2);
      return s + ")";
    }
    case Kind::Exists:
    case Kind::Forall: {
      std::string s = f.kind() == Kind::Exists ? "(exists (" : "(forall (";
      for (std::size_t i = 0; i < f.bound().size(); ++i) {
        if (i > 0) s += " ";
        s += "(" + f.bound()[i] + " Real)";
      }
      return s + ")\n" + pad + to_smtlib(f.children().front(), indent + 2) + ")";
    }
  }
  return "true";
}

}  // namespace rup::fo
