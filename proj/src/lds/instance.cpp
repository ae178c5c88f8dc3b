#include "rup/lds/instance.hpp"

#include <string>

#include "rup/errors.hpp"

namespace rup {

std::string_view to_string(Mode mode) { return mode == Mode::Discrete ? "discrete" : "continuous"; }

Instance::Instance(Mode mode, std::vector<Rational> coefficients, std::vector<Rational> initial)
    : mode_(mode), c_(std::move(coefficients)), v_(std::move(initial)) {
  if (c_.empty()) throw PreconditionError("instance order must be at least 1");
  if (c_.size() != v_.size()) {
    throw PreconditionError("coefficient and initial vectors differ in length (" + std::to_string(c_.size()) +
                            " vs " + std::to_string(v_.size()) + ")");
  }
}

Instance Instance::with_initial(std::vector<Rational> initial) const { return {mode_, c_, std::move(initial)}; }

Polynomial characteristic_poly(const Instance& inst) {
  std::vector<Rational> coeffs = inst.coefficients();
  coeffs.emplace_back(1);
  return Polynomial(std::move(coeffs));
}

void require_mode(const Instance& inst, Mode expected) {
  if (inst.mode() != expected) {
    throw ModeMismatch("operation needs a " + std::string(to_string(expected)) + " instance, got " +
                       std::string(to_string(inst.mode())));
  }
}

}  // namespace rup
