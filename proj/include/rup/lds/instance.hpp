#pragma once

#include <string_view>
#include <vector>

#include "rup/algebra/polynomial.hpp"

namespace rup {

enum class Mode { Discrete, Continuous };

std::string_view to_string(Mode mode);

/// (c, v) for an order-k linear recurrence
///   u[n+k] + c_{k-1} u[n+k-1] + ... + c_0 u[n] = 0,  v = (u[0], ..., u[k-1])
/// or the linear ODE
///   u^(k) + c_{k-1} u^(k-1) + ... + c_0 u = 0,       v = (u(0), ..., u^(k-1)(0)).
class Instance {
 public:
  /// Throws PreconditionError unless |c| = |v| >= 1.
  Instance(Mode mode, std::vector<Rational> coefficients, std::vector<Rational> initial);

  Mode mode() const noexcept { return mode_; }
  std::size_t order() const noexcept { return c_.size(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  const std::vector<Rational>& initial() const noexcept { return v_; }

  Instance with_initial(std::vector<Rational> initial) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Mode mode_;
  std::vector<Rational> c_;
  std::vector<Rational> v_;
};

/// z^k + c_{k-1} z^{k-1} + ... + c_0.
Polynomial characteristic_poly(const Instance& inst);

void require_mode(const Instance& inst, Mode expected);

}  // namespace rup
