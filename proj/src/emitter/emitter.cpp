#include "rup/emitter/emitter.hpp"


#include "rup/cli/instance_io.hpp"
#include "rup/transform/transform.hpp"

namespace rup::fo {

ComplexExpansion expand_complex_eval(const std::vector<Term>& coeffs, const Term& x, const Term& y) {
  ComplexExpansion out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    for (std::size_t l = 0; 2 * l <= j; ++l) {
      const Rational sign = l % 2 == 0 ? 1 : -1;
      const auto ju = static_cast<unsigned>(j);
      const auto lu = static_cast<unsigned>(l);
      out.re += coeffs[j] * Term(sign * Rational(binomial(ju, 2 * lu))) * pow(x, ju - 2 * lu) * pow(y, 2 * lu);
      if (2 * l + 1 <= j) {
        out.im += coeffs[j] * Term(sign * Rational(binomial(ju, 2 * lu + 1))) * pow(x, ju - 2 * lu - 1) *
                  pow(y, 2 * lu + 1);
      }
    }
  }
  return out;
}

ComplexExpansion expand_complex_eval(const Polynomial& p) {
  std::vector<Term> coeffs(p.coefficients().begin(), p.coefficients().end());
  return expand_complex_eval(coeffs, Term::variable("x"), Term::variable("y"));
}

SymbolicSystem instantiated_system(const Instance& inst) {
  const std::size_t k = inst.order();
  const Polynomial chi = characteristic_poly(inst);
  const Polynomial num = transform_numerator(inst);
  SymbolicSystem sys{inst.mode(), k, {}, {}, {}, inst};
  for (std::size_t i = 0; i <= k; ++i) {
    sys.chi.emplace_back(chi.coeff(i));
    sys.numerator.emplace_back(num.coeff(i));
  }
  return sys;
}

SymbolicSystem parametric_system(Mode mode, std::size_t k) {
  SymbolicSystem sys{mode, k, {}, std::vector<Term>(k + 1), {}, std::nullopt};
  std::vector<Term> c;
  std::vector<Term> v;
  for (std::size_t i = 0; i < k; ++i) {
    sys.free_constants.push_back("c" + std::to_string(i));
    c.push_back(Term::variable(sys.free_constants.back()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    sys.free_constants.push_back("v" + std::to_string(i));
    v.push_back(Term::variable(sys.free_constants.back()));
  }
  c.emplace_back(1);
  sys.chi = c;
  if (mode == Mode::Discrete) {
    // psi_d = sum_{i=d..k} c_i v_{i-d}, d >= 1
    for (std::size_t d = 1; d <= k; ++d) {
      for (std::size_t i = d; i <= k; ++i) sys.numerator[d] += c[i] * v[i - d];
    }
  } else {
    // phi_d = sum_{i=d+1..k} c_i v_{i-d-1}
    for (std::size_t d = 0; d < k; ++d) {
      for (std::size_t i = d + 1; i <= k; ++i) sys.numerator[d] += c[i] * v[i - d - 1];
    }
  }
  return sys;
}

std::map<std::string, Rational> constant_values(const Instance& inst) {
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < inst.order(); ++i) {
    out["c" + std::to_string(i)] = inst.coefficients()[i];
    out["v" + std::to_string(i)] = inst.initial()[i];
  }
  return out;
}

namespace {

std::vector<Term> derivative(const std::vector<Term>& coeffs) {
  std::vector<Term> out;
  for (std::size_t i = 1; i < coeffs.size(); ++i) out.push_back(coeffs[i] * Term(static_cast<int>(i)));
  return out;
}

std::vector<std::string> names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<Term> vars(const std::vector<std::string>& ns) {
  std::vector<Term> out;
  for (const auto& n : ns) out.push_back(Term::variable(n));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// conv(a, b) = target coefficientwise, both sides padded with zeros.
Formula convolution_equals(const std::vector<Term>& a, const std::vector<Term>& b, const std::vector<Term>& target) {
  const auto prod = convolve(a, b);
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < std::max(prod.size(), target.size()); ++i) {
    const Term lhs = i < prod.size() ? prod[i] : Term();
    const Term rhs = i < target.size() ? target[i] : Term();
    parts.push_back(eq(lhs, rhs));
  }
  return Formula::conjunction(std::move(parts));
}

/// initial1(x, y): dividing chi by its gcd g with the numerator leaves a
/// quotient h2 vanishing at x + iy. One disjunct per gcd degree d, g monic.
Formula support_clause(const SymbolicSystem& sys, const Term& x, const Term& y) {
  const std::size_t k = sys.order;
  std::vector<Formula> per_degree;
  for (std::size_t d = 0; d <= k; ++d) {
    const auto g_names = names("g", d);
    std::vector<Term> g = vars(g_names);
    g.emplace_back(1);
    const auto h1_names = names("h1_", k - d + 1);
    const auto h2_names = names("h2_", k - d + 1);
    const auto h1 = vars(h1_names);
    const auto h2 = vars(h2_names);
    const auto h2_at = expand_complex_eval(h2, x, y);

    const auto f_names = names("f", k + 1);
    const auto f1_names = names("f1_", k + 1);
    const auto f2_names = names("f2_", k + 1);
    const auto l_names = names("l", d + 1);
    const auto f = vars(f_names);
    const Formula common_divisor =
        Formula::exists(concat(f1_names, f2_names),
                        Formula::conjunction({convolution_equals(f, vars(f1_names), sys.numerator),
                                              convolution_equals(f, vars(f2_names), sys.chi)}));
    const Formula divides_g = Formula::exists(l_names, convolution_equals(f, vars(l_names), g));
    const Formula maximal = Formula::forall(f_names, Formula::implication(common_divisor, divides_g));

    per_degree.push_back(Formula::exists(
        concat(concat(g_names, h1_names), h2_names),
        Formula::conjunction({convolution_equals(g, h1, sys.numerator), convolution_equals(g, h2, sys.chi),
                              eq(h2_at.re, 0), eq(h2_at.im, 0), maximal})));
  }
  return Formula::disjunction(std::move(per_degree));
}

}  // namespace

Formula robust_yes_formula(const SymbolicSystem& sys) {
  const Term rho = Term::variable("rho");
  const Term x = Term::variable("x");
  const Term y = Term::variable("y");
  const auto chi_xy = expand_complex_eval(sys.chi, x, y);
  const bool discrete = sys.mode == Mode::Discrete;

  // every root other than rho itself is strictly dominated
  const Formula dominated =
      discrete ? Formula::disjunction({lt(x * x + y * y, rho * rho), Formula::conjunction({eq(x, rho), eq(y, 0)})})
               : Formula::disjunction({lt(x, rho), Formula::conjunction({eq(x, rho), eq(y, 0)})});
  std::vector<Formula> spectral{eq(evaluate_poly(sys.chi, rho), 0)};
  if (discrete) spectral.push_back(gt(rho, 0));
  spectral.push_back(ne(evaluate_poly(derivative(sys.chi), rho), 0));
  spectral.push_back(Formula::forall(
      {"x", "y"}, Formula::implication(Formula::conjunction({eq(chi_xy.re, 0), eq(chi_xy.im, 0)}), dominated)));
  spectral.push_back(gt(evaluate_poly(sys.numerator, rho), 0));
  return Formula::exists({"rho"}, Formula::conjunction(std::move(spectral)));
}

Formula robust_no_formula(const SymbolicSystem& sys) {
  const Term rho = Term::variable("rho");
  const Term x = Term::variable("x");
  const Term y = Term::variable("y");
  const Term r = Term::variable("r");
  const auto chi_xy = expand_complex_eval(sys.chi, x, y);
  const bool discrete = sys.mode == Mode::Discrete;

  const Formula oscillating = discrete ? Formula::disjunction({lt(x, 0), ne(y, 0)}) : ne(y, 0);
  const Formula beats_reals =
      discrete ? Formula::forall({"r"}, Formula::implication(
                                            Formula::conjunction({gt(r, 0), eq(evaluate_poly(sys.chi, r), 0)}),
                                            gt(x * x + y * y, r * r)))
               : Formula::forall({"r"}, Formula::implication(eq(evaluate_poly(sys.chi, r), 0), gt(x, r)));
  const Formula first = Formula::exists(
      {"x", "y"}, Formula::conjunction({oscillating, eq(chi_xy.re, 0), eq(chi_xy.im, 0), beats_reals,
                                        support_clause(sys, x, y)}));

  std::vector<Formula> spectral2;
  if (discrete) spectral2.push_back(gt(rho, 0));
  spectral2.push_back(eq(evaluate_poly(sys.chi, rho), 0));
  spectral2.push_back(
      Formula::forall({"r"}, Formula::implication(eq(evaluate_poly(sys.chi, r), 0), le(r, rho))));
  spectral2.push_back(lt(evaluate_poly(sys.numerator, rho), 0));
  const Formula second = Formula::exists({"rho"}, Formula::conjunction(std::move(spectral2)));
  return Formula::disjunction({first, second});
}

std::string emit_script(const Formula& assertion, const std::vector<std::string>& free_constants,
                        const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "; " + c + "\n";
  out += "(set-logic NRA)\n";
  for (const auto& c : free_constants) out += "(declare-const " + c + " Real)\n";
  const Formula* body = &assertion;
  if (assertion.kind() == Formula::Kind::Exists) {
    for (const auto& v : assertion.bound()) out += "(declare-const " + v + " Real)\n";
    body = &assertion.children().front();
  }
  out += "(assert\n  " + to_smtlib(*body, 2) + ")\n";
  out += "(check-sat)\n(exit)\n";
  return out;
}

namespace {

std::vector<std::string> header(const SymbolicSystem& sys, const std::string& which) {
  std::vector<std::string> lines{which + " formula, " + std::string(to_string(sys.mode)) + " mode, order " +
                                 std::to_string(sys.order)};
  if (sys.instance) {
    lines.push_back("instance: " + format_instance(*sys.instance));
  } else {
    lines.push_back("parametric: free constants c0..c" + std::to_string(sys.order - 1) + ", v0..v" +
                    std::to_string(sys.order - 1));
  }
  return lines;
}

}  // namespace

std::string emit_robust_yes(const SymbolicSystem& sys) {
  return emit_script(robust_yes_formula(sys).simplified(), sys.free_constants, header(sys, "robust YES"));
}

std::string emit_robust_no(const SymbolicSystem& sys) {
  return emit_script(robust_no_formula(sys).simplified(), sys.free_constants, header(sys, "robust NO"));
}

}  // namespace rup::fo
