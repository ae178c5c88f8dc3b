#include "rup/lds/simulate.hpp"

#include <cmath>
#include <limits>

#include "rup/errors.hpp"

namespace rup {

std::vector<Rational> discrete_terms(const Instance& inst, std::size_t count) {
  require_mode(inst, Mode::Discrete);
  const auto& c = inst.coefficients();
  const std::size_t k = inst.order();
  std::vector<Rational> u(inst.initial().begin(), inst.initial().end());
  u.reserve(std::max(count, k));
  while (u.size() < count) {
    const std::size_t n = u.size() - k;
    Rational next = 0;
    for (std::size_t j = 0; j < k; ++j) next -= c[j] * u[n + j];
    u.push_back(std::move(next));
  }
  u.resize(count);
  return u;
}

Trajectory simulate_discrete(const Instance& inst, int n_max) {
  require_mode(inst, Mode::Discrete);
  if (n_max < 0) throw PreconditionError("n_max must be nonnegative");
  const auto terms = discrete_terms(inst, static_cast<std::size_t>(n_max) + 1);
  Trajectory out{Mode::Discrete, {}};
  out.samples.reserve(terms.size());
  for (std::size_t n = 0; n < terms.size(); ++n) out.samples.push_back({Rational(static_cast<long>(n)), terms[n], 0.0});
  return out;
}

namespace {

using Vec = std::vector<long double>;
using Mat = std::vector<Vec>;

constexpr long double kUnitRoundoff = std::numeric_limits<long double>::epsilon();

long double inf_norm(const Vec& x) {
  long double m = 0;
  for (auto v : x) m = std::max(m, std::fabs(v));
  return m;
}

Vec mul(const Mat& a, const Vec& x) {
  Vec y(x.size(), 0.0L);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

}  // namespace

CompanionFlow::CompanionFlow(const Instance& inst) {
  const std::size_t k = inst.order();
  const auto& c = inst.coefficients();
  // s = power of two >= 2 max |c_j|^(1/(k-j)), so every root has modulus < s
  // and the scaled last row sums to less than s
  double bound = 0;
  for (std::size_t j = 0; j < k; ++j) {
    bound = std::max(bound, std::pow(std::fabs(c[j].get_d()), 1.0 / static_cast<double>(k - j)));
  }
  scale_ = bound > 0 ? std::exp2(std::ceil(std::log2(2 * bound))) : 1.0L;
  scale_ = std::max(scale_, 1.0L);

  a_.assign(k, Vec(k, 0.0L));
  for (std::size_t i = 0; i + 1 < k; ++i) a_[i][i + 1] = scale_;
  for (std::size_t j = 0; j < k; ++j) {
    const double cj = c[j].get_d();
    const long double factor = std::pow(scale_, static_cast<long double>(j) - static_cast<long double>(k) + 1);
    a_[k - 1][j] = -static_cast<long double>(cj) * factor;
    matrix_error_ += std::fabs(Rational(Rational(cj) - c[j]).get_d()) * factor;
  }
  for (const auto& row : a_) {
    long double s = 0;
    for (auto v : row) s += std::fabs(v);
    norm_ = std::max(norm_, s);
  }
}

std::vector<long double> CompanionFlow::initial_state(const std::vector<Rational>& v, long double* rounding) const {
  std::vector<long double> y;
  long double err = 0;
  Rational power = 1;
  const Rational s = from_double(static_cast<double>(scale_));
  for (const auto& vi : v) {
    const Rational exact = vi / power;
    const double approx = exact.get_d();
    err = std::max<long double>(err, std::fabs(Rational(Rational(approx) - exact).get_d()));
    y.push_back(approx);
    power *= s;
  }
  if (rounding != nullptr) *rounding = err;
  return y;
}

std::vector<long double> CompanionFlow::advance(const std::vector<long double>& x0, long double dt,
                                                long double* rel_error) const {
  const std::size_t k = order();
  // substeps with ||A|| h <= 1/2
  const long double total = norm_ * dt;
  const long long steps = std::max<long long>(1, static_cast<long long>(std::ceil(total * 2)));
  const long double h = dt / static_cast<long double>(steps);
  const long double ah = norm_ * h;

  Vec x = x0;
  long double rel = 0;
  for (long long s = 0; s < steps; ++s) {
    // Taylor series of exp(A h) x; terms shrink by at least a factor 2
    Vec term = x;
    Vec sum = x;
    long double term_bound = 1;
    int n = 0;
    while (term_bound > kUnitRoundoff * 1e-3L) {
      ++n;
      term = mul(a_, term);
      for (auto& t : term) t *= h / static_cast<long double>(n);
      for (std::size_t i = 0; i < k; ++i) sum[i] += term[i];
      term_bound *= ah / static_cast<long double>(n);
    }
    // truncation (geometric tail) plus roundoff of n products and sums
    const long double growth = std::exp(ah);
    const long double step_rel = 2 * term_bound + static_cast<long double>(n * (k + 2)) * kUnitRoundoff * growth;
    rel = rel * growth + step_rel;
    x = std::move(sum);
  }
  if (rel_error != nullptr) *rel_error = rel;
  return x;
}

Trajectory simulate_continuous(const Instance& inst, std::span<const Rational> times, const Rational& tol) {
  require_mode(inst, Mode::Continuous);
  if (tol <= 0) throw PreconditionError("tolerance must be positive");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0) throw PreconditionError("times must be nonnegative");
    if (i > 0 && times[i] <= times[i - 1]) throw PreconditionError("times must be strictly increasing");
  }
  const CompanionFlow flow(inst);
  // absolute error bound on the scaled state, in the infinity norm
  long double err = 0;
  Vec x = flow.initial_state(inst.initial(), &err);
  Rational now_exact = 0;
  Trajectory out{Mode::Continuous, {}};
  const long double tol_ld = tol.get_d();
  for (const auto& t : times) {
    const Rational dt_exact = t - now_exact;
    const long double dt = static_cast<long double>(dt_exact.get_d());
    if (dt > 0) {
      long double rel = 0;
      const long double growth = std::exp(flow.norm() * dt);
      Vec next = flow.advance(x, dt, &rel);
      // time-conversion error: |dt - dt_exact| * ||A|| * ||x|| * growth
      const long double dt_err = std::fabs(dt) * kUnitRoundoff;
      // coefficient rounding perturbs A by at most matrix_error()
      const long double coeff_err = dt * flow.matrix_error() * growth * std::max(inf_norm(x), inf_norm(next));
      err = err * growth + rel * inf_norm(x) + dt_err * flow.norm() * inf_norm(next) * growth + coeff_err;
      x = std::move(next);
    }
    now_exact = t;
    if (!std::isfinite(err) || !std::isfinite(x[0])) throw SimulationError("continuous simulation overflowed");
    if (err > tol_ld) {
      throw SimulationError("error bound " + std::to_string(static_cast<double>(err)) +
                            " exceeds tolerance at t = " + to_string(t));
    }
    out.samples.push_back({t, from_double(static_cast<double>(x[0])), static_cast<double>(err)});
  }
  return out;
}

}  // namespace rup
