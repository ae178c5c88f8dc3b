#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rup/emitter/term.hpp"

namespace rup::fo {

enum class Comparator { Gt, Ge, Eq, Ne, Lt, Le };

/// First-order formula over the reals: quantifiers, connectives and atoms of
/// the form `term <cmp> 0`.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies, Exists, Forall };

  static Formula truth(bool value);
  static Formula atom(Term term, Comparator cmp);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> parts);
  static Formula disjunction(std::vector<Formula> parts);
  static Formula implication(Formula premise, Formula conclusion);
  static Formula exists(std::vector<std::string> vars, Formula body);
  static Formula forall(std::vector<std::string> vars, Formula body);

  Kind kind() const { return kind_; }
  Comparator comparator() const { return cmp_; }
  const Term& term() const { return term_; }
  const std::vector<Formula>& children() const { return children_; }
  const std::vector<std::string>& bound() const { return bound_; }

  std::set<std::string> free_variables() const;
  /// Substitutes values for free occurrences only.
  Formula substitute(const std::map<std::string, Rational>& values) const;
  /// Folds constant atoms and trivial connectives/quantifiers.
  Formula simplified() const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Kind kind_ = Kind::True;
  Comparator cmp_ = Comparator::Eq;
  Term term_;
  std::vector<Formula> children_;
  std::vector<std::string> bound_;
};

inline Formula eq(const Term& a, const Term& b) { return Formula::atom(a - b, Comparator::Eq); }
inline Formula ne(const Term& a, const Term& b) { return Formula::atom(a - b, Comparator::Ne); }
inline Formula lt(const Term& a, const Term& b) { return Formula::atom(a - b, Comparator::Lt); }
inline Formula le(const Term& a, const Term& b) { return Formula::atom(a - b, Comparator::Le); }
inline Formula gt(const Term& a, const Term& b) { return Formula::atom(a - b, Comparator::Gt); }
inline Formula ge(const Term& a, const Term& b) { return Formula::atom(a - b, Comparator::Ge); }

/// Pretty-printed SMT-LIB term; `indent` is the column of the first line.
std::string to_smtlib(const Formula& f, int indent = 0);

}  // namespace rup::fo
