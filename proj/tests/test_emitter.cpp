#include <doctest.h>

#include "rup/cli/instance_io.hpp"
#include "rup/emitter/emitter.hpp"
#include "rup/emitter/smtlib_validator.hpp"
#include "test_support.hpp"

using namespace rup;
using namespace rup::fo;
using rup::testing::q;

namespace {

const Term x = Term::variable("x");
const Term y = Term::variable("y");

Rational eval_term(const Term& t, const Rational& xv, const Rational& yv) {
  const Term s = t.substitute({{"x", xv}, {"y", yv}});
  REQUIRE(s.is_constant());
  return s.constant_value();
}

std::vector<Instance> suite() {
  return {
      Instance(Mode::Discrete, {-1, -1}, {0, 1}),        Instance(Mode::Discrete, {-2}, {3}),
      Instance(Mode::Discrete, {2}, {1}),                Instance(Mode::Discrete, {-1, 1, -1}, {2, 1, 0}),
      Instance(Mode::Discrete, {-2, 1}, {1, 1}),         Instance(Mode::Continuous, {1, 0}, {1, 0}),
      Instance(Mode::Continuous, {-1}, {1}),             Instance(Mode::Continuous, {-1, 0}, {1, 1}),
      Instance(Mode::Discrete, {-1, -1}, {0, 0}),        Instance(Mode::Continuous, {1, 0}, {0, 0}),
  };
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("term arithmetic and printing") {
  const Term t = x * x - Term(q(3, 4)) * y + Term(2);
  CHECK(to_smtlib(t) == "(+ 2 (* x x) (* (- (/ 3 4)) y))");
  CHECK(to_smtlib(Term()) == "0");
  CHECK((x - x).is_zero());
  CHECK(pow(x + y, 2) == x * x + Term(2) * x * y + y * y);
  CHECK(eval_term(t, 2, 4) == 3);
}

TEST_CASE("expand_complex_eval examples") {
  auto sq = expand_complex_eval(Polynomial{0, 0, 1});
  CHECK(sq.re == x * x - y * y);
  CHECK(sq.im == Term(2) * x * y);
  auto lin = expand_complex_eval(Polynomial{5, 1});
  CHECK(lin.re == x + Term(5));
  CHECK(lin.im == y);
  auto cube = expand_complex_eval(Polynomial{0, 0, 0, 1});
  CHECK(cube.re == pow(x, 3) - Term(3) * x * y * y);
  CHECK(cube.im == Term(3) * x * x * y - pow(y, 3));
}

TEST_CASE("expand_complex_eval agrees with evaluation") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = rup::testing::random_polynomial(rng, 1 + trial % 6, 5);
    const auto e = expand_complex_eval(p);
    for (int i = 0; i < 5; ++i) {
      const Rational xv = rup::testing::random_rational(rng, -4, 4, 3);
      CHECK(eval_term(e.re, xv, 0) == p(xv));
      CHECK(eval_term(e.im, xv, 0) == 0);
      // against complex arithmetic at x + iy
      const Rational yv = rup::testing::random_rational(rng, -4, 4, 3);
      Rational re = 0, im = 0;
      for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
        const Rational nre = re * xv - im * yv + *it;
        im = re * yv + im * xv;
        re = nre;
      }
      CHECK(eval_term(e.re, xv, yv) == re);
      CHECK(eval_term(e.im, xv, yv) == im);
    }
  }
}

TEST_CASE("parametric systems use the closed summation formulas") {
  const Instance fib(Mode::Discrete, {-1, -1}, {0, 1});
  for (Mode m : {Mode::Discrete, Mode::Continuous}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      std::mt19937_64 rng(32 + k);
      std::vector<Rational> c, v;
      for (std::size_t i = 0; i < k; ++i) {
        c.push_back(rup::testing::random_rational(rng, -5, 5, 3));
        v.push_back(rup::testing::random_rational(rng, -5, 5, 3));
      }
      const Instance inst(m, c, v);
      const auto par = parametric_system(m, k);
      const auto ins = instantiated_system(inst);
      CHECK(par.free_constants.size() == 2 * k);
      const auto values = constant_values(inst);
      for (std::size_t i = 0; i <= k; ++i) {
        CHECK(par.chi[i].substitute(values) == ins.chi[i]);
        CHECK(par.numerator[i].substitute(values) == ins.numerator[i]);
      }
      // substituting into the parametric formula yields the instantiated one
      CHECK(robust_yes_formula(par).substitute(values).simplified() == robust_yes_formula(ins).simplified());
      CHECK(robust_no_formula(par).substitute(values).simplified() == robust_no_formula(ins).simplified());
    }
  }
}

TEST_CASE("k = 1 parametric YES formula") {
  const auto f = robust_yes_formula(parametric_system(Mode::Discrete, 1));
  CHECK(f.free_variables() == std::set<std::string>{"c0", "v0"});
  const std::string text = to_smtlib(f);
  CHECK(text.find("(> rho 0)") != std::string::npos);
}

TEST_CASE("emitted scripts validate") {
  for (const auto& inst : suite()) {
    const auto sys = instantiated_system(inst);
    for (const auto& script : {emit_robust_yes(sys), emit_robust_no(sys)}) {
      const auto errors = validate_smtlib(script);
      CHECK_MESSAGE(errors.empty(), script << "\n" << (errors.empty() ? "" : errors.front()));
      CHECK(script.find("(set-logic NRA)") != std::string::npos);
      CHECK(script.find(format_instance(inst)) != std::string::npos);
    }
  }
  for (Mode m : {Mode::Discrete, Mode::Continuous}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto sys = parametric_system(m, k);
      CHECK(is_valid_smtlib(emit_robust_yes(sys)));
      CHECK(is_valid_smtlib(emit_robust_no(sys)));
      CHECK(emit_robust_yes(sys).find("(declare-const c0 Real)") != std::string::npos);
    }
  }
}

TEST_CASE("robust NO structure for k = 2") {
  const auto sys = parametric_system(Mode::Discrete, 2);
  const auto f = robust_no_formula(sys).simplified();
  REQUIRE(f.kind() == Formula::Kind::Or);
  CHECK(f.children().size() == 2);
  CHECK(f.children()[0].kind() == Formula::Kind::Exists);
  CHECK(f.children()[1].kind() == Formula::Kind::Exists);
  const std::string script = emit_robust_no(sys);
  // one disjunction directly under assert
  CHECK(script.find("(assert\n  (or") != std::string::npos);
  // no coefficient vector longer than 2k + 1
  for (const char* prefix : {"g", "h1_", "h2_", "f", "f1_", "f2_", "l"}) {
    CHECK(count(script, std::string("(") + prefix + "5 Real)") == 0);
  }
  CHECK(count(script, "(f2_2 Real)") > 0);
}

TEST_CASE("zero numerator makes the YES script trivially false") {
  const auto sys = instantiated_system(Instance(Mode::Discrete, {-1, -1}, {0, 0}));
  CHECK(robust_yes_formula(sys).simplified().kind() == Formula::Kind::False);
  CHECK(is_valid_smtlib(emit_robust_yes(sys)));
}

TEST_CASE("formula simplification and substitution respect binding") {
  const Formula f = Formula::conjunction({gt(x, 0), Formula::exists({"x"}, eq(x, y))});
  CHECK(f.free_variables() == std::set<std::string>{"x", "y"});
  const Formula g = f.substitute({{"x", Rational(1)}});
  CHECK(g.free_variables() == std::set<std::string>{"y"});
  CHECK(Formula::conjunction({gt(Term(1), 0), lt(Term(2), 3)}).simplified().kind() == Formula::Kind::True);
  CHECK(Formula::disjunction({lt(Term(1), 0), ne(x, x)}).simplified().kind() == Formula::Kind::False);
  CHECK(to_smtlib(ne(x, 0)) == "(distinct x 0)");
}

TEST_CASE("validator rejects malformed scripts") {
  CHECK(is_valid_smtlib("(set-logic NRA)\n(declare-const a Real)\n(assert (> a 0))\n(check-sat)\n"));
  CHECK_FALSE(is_valid_smtlib("(set-logic NRA)\n(assert (> a 0))\n(check-sat)\n"));
  CHECK_FALSE(is_valid_smtlib("(set-logic NRA)\n(declare-const a Real)\n(assert (> a 0)\n(check-sat)\n"));
  CHECK_FALSE(is_valid_smtlib("(set-logic NRA)\n(declare-const a Real)\n(assert (> a 0)))\n(check-sat)\n"));
  CHECK_FALSE(is_valid_smtlib("(set-logic NRA)\n(declare-const a Real)\n(assert (frob a 0))\n(check-sat)\n"));
  CHECK_FALSE(is_valid_smtlib("(set-logic NRA)\n(declare-const a Real)\n(assert (+ a 1))\n(check-sat)\n"));
  CHECK(is_valid_smtlib("(set-logic NRA)\n(assert (forall ((b Real)) (exists ((c Real)) (< b c))))\n(check-sat)\n"));
  CHECK_FALSE(is_valid_smtlib("(set-logic NRA)\n(assert (and (forall ((b Real)) (> b 0)) (> b 1)))\n(check-sat)\n"));
  CHECK_FALSE(is_valid_smtlib("(set-logic NRA)\n(declare-const a Real)\n(declare-const a Real)\n"
                              "(assert (> a 0))\n(check-sat)\n"));
  CHECK_FALSE(is_valid_smtlib("(declare-const a Real)\n(assert (> a 0))\n(check-sat)\n"));
}
