#pragma once

#include <optional>
#include <string_view>

#include "rup/algebra/algebraic_real.hpp"
#include "rup/algebra/complex_roots.hpp"
#include "rup/lds/instance.hpp"

namespace rup {

enum class VerdictKind { RobustYes, RobustNo, NonRobust };
enum class Condition { Yes, No1, No2, None };

std::string_view to_string(VerdictKind kind);
std::string_view to_string(Condition condition);

/// Evidence for a verdict. Only the fields of the condition that fired are
/// set: Yes and No2 carry the dominant real root and the numerator's sign
/// there; No1 carries the oscillating root and the support quotient.
struct Witness {
  std::optional<AlgebraicReal> dominant_root;
  std::optional<RootBox> oscillating_root;
  std::optional<int> numerator_sign_at_rho;
  std::optional<Polynomial> support_quotient;
  Condition triggered = Condition::None;
};

struct Verdict {
  VerdictKind kind;
  Witness witness;
};

/// Raw truth values of the three conditions, before they are combined into a
/// verdict. `yes` and `no1 || no2` are never both true.
struct ConditionValues {
  bool yes = false;
  bool no1 = false;
  bool no2 = false;
};

/// chi / gcd(chi, num). A root of chi carries a nonzero block of
/// closed-form coefficients iff this quotient vanishes there. num = 0 gives 1.
Polynomial support_quotient(const Polynomial& chi, const Polynomial& num);

/// Discrete (recurrence) classification. Throws ModeMismatch for continuous
/// instances.
Verdict classify_discrete(const Instance& inst);
/// Continuous (ODE) classification. Throws ModeMismatch for discrete
/// instances.
Verdict classify_continuous(const Instance& inst);
Verdict classify(const Instance& inst);

/// All three condition values for an instance of either mode.
ConditionValues evaluate_conditions(const Instance& inst);

}  // namespace rup
