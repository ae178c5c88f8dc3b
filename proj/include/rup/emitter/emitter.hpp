#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rup/algebra/polynomial.hpp"
#include "rup/emitter/formula.hpp"
#include "rup/lds/instance.hpp"

namespace rup::fo {

/// Re and Im of p(x + iy) as polynomials in x and y, from the binomial
/// expansion of each (x + iy)^j.
struct ComplexExpansion {
  Term re;
  Term im;
};

ComplexExpansion expand_complex_eval(const std::vector<Term>& coeffs, const Term& x, const Term& y);
/// For a rational polynomial, in variables named "x" and "y".
ComplexExpansion expand_complex_eval(const Polynomial& p);

/// chi and the transform numerator as coefficient vectors of length k + 1,
/// either with rational entries (instantiated) or as expressions in the free
/// constants c0..c{k-1}, v0..v{k-1} (parametric).
struct SymbolicSystem {
  Mode mode;
  std::size_t order;
  std::vector<Term> chi;
  std::vector<Term> numerator;
  std::vector<std::string> free_constants;
  std::optional<Instance> instance;
};

/// chi from the instance, numerator from the transform module.
SymbolicSystem instantiated_system(const Instance& inst);
/// chi_i = c_i, numerator from the closed summation formulas in c and v.
SymbolicSystem parametric_system(Mode mode, std::size_t order);

/// exists rho. spectral(rho) /\ initial(rho)
Formula robust_yes_formula(const SymbolicSystem& sys);
/// (exists x, y. spectral1 /\ initial1) \/ (exists rho. spectral2 /\ initial2)
Formula robust_no_formula(const SymbolicSystem& sys);

/// Values for the free constants of a parametric system.
std::map<std::string, Rational> constant_values(const Instance& inst);

/// A complete SMT-LIB script: header comments, logic, declarations for the
/// free constants and for the leading existential block (hoisted into
/// declare-const), one assert, check-sat.
std::string emit_script(const Formula& assertion, const std::vector<std::string>& free_constants,
                        const std::vector<std::string>& comments);

std::string emit_robust_yes(const SymbolicSystem& sys);
std::string emit_robust_no(const SymbolicSystem& sys);

}  // namespace rup::fo
