#pragma once

#include <span>
#include <vector>

#include "rup/lds/instance.hpp"

namespace rup {

struct TrajectoryPoint {
  Rational at;         // index n or time t
  Rational value;      // exact in discrete mode; the computed double otherwise
  double error_bound;  // 0 in discrete mode
};

struct Trajectory {
  Mode mode;
  std::vector<TrajectoryPoint> samples;
};

/// u[0..n_max], exact.
Trajectory simulate_discrete(const Instance& inst, int n_max);

/// The first `count` terms as plain values.
std::vector<Rational> discrete_terms(const Instance& inst, std::size_t count);

inline const Rational kDefaultTolerance{1, 1000000000};

/// u(t) at each requested time (nonnegative, strictly increasing) with
/// absolute error at most `tol`. Propagates the companion system
/// x' = A x with a truncated Taylor series of exp(A h) in long double and a
/// running error bound; throws SimulationError when the bound exceeds `tol`.
Trajectory simulate_continuous(const Instance& inst, std::span<const Rational> times,
                               const Rational& tol = kDefaultTolerance);

/// Companion-matrix flow in long double, used by the continuous oracles.
/// States are kept in scaled coordinates y_i = u^(i) / s^i, with s a power of
/// two above the root moduli, so that ||A|| is of the order of the largest
/// root rather than of the largest coefficient. y_0 = u.
class CompanionFlow {
 public:
  explicit CompanionFlow(const Instance& inst);

  std::size_t order() const { return a_.size(); }
  long double scale() const { return scale_; }
  /// max row sum of the scaled A.
  long double norm() const { return norm_; }
  /// Bound on ||A - A_exact|| from rounding the coefficients.
  long double matrix_error() const { return matrix_error_; }

  /// Scaled state for the initial values; the rounding error (infinity norm)
  /// goes to `rounding`.
  std::vector<long double> initial_state(const std::vector<Rational>& v, long double* rounding = nullptr) const;

  /// exp(A dt) y, with a bound on the relative error ||err|| / ||y|| of the
  /// step written to `rel_error`.
  std::vector<long double> advance(const std::vector<long double>& y, long double dt,
                                   long double* rel_error = nullptr) const;

 private:
  std::vector<std::vector<long double>> a_;
  long double scale_ = 1;
  long double norm_ = 0;
  long double matrix_error_ = 0;
};

}  // namespace rup
