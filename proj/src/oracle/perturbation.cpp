#include "rup/oracle/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rup/errors.hpp"
#include "rup/lds/simulate.hpp"

namespace rup {

namespace {

constexpr long kGridSteps = 1L << 16;

std::vector<Rational> entries(const Instance& inst) {
  std::vector<Rational> all = inst.coefficients();
  all.insert(all.end(), inst.initial().begin(), inst.initial().end());
  return all;
}

Instance from_entries(const Instance& base, const std::vector<Rational>& all) {
  const std::size_t k = base.order();
  return Instance(base.mode(), std::vector<Rational>(all.begin(), all.begin() + static_cast<long>(k)),
                  std::vector<Rational>(all.begin() + static_cast<long>(k), all.end()));
}

}  // namespace

std::vector<Instance> axis_corners(const Instance& inst, const Rational& epsilon) {
  if (epsilon <= 0) throw PreconditionError("epsilon must be positive");
  const auto base = entries(inst);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (int s : {1, -1}) {
      auto moved = base;
      moved[i] += s * epsilon;
      out.push_back(from_entries(inst, moved));
    }
  }
  return out;
}

PerturbationSample sample_perturbations(const Instance& inst, const Rational& epsilon, long count,
                                        std::uint64_t seed) {
  if (count < 0) throw PreconditionError("count must be nonnegative");
  PerturbationSample sample{inst, epsilon, seed, axis_corners(inst, epsilon)};
  const auto base = entries(inst);
  const Rational step = epsilon / kGridSteps;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> grid(-kGridSteps, kGridSteps);
  for (long s = 0; s < count; ++s) {
    auto moved = base;
    for (auto& e : moved) e += step * grid(rng);
    sample.instances.push_back(from_entries(inst, moved));
  }
  return sample;
}

std::string_view to_string(Empirical e) {
  switch (e) {
    case Empirical::Yes:
      return "Yes";
    case Empirical::No:
      return "No";
    case Empirical::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

// Signs of u[n] from the integer sequence w[n] = L * D^n * u[n], where D
// clears the denominators of c and L those of v:
//   w[n+k] = -sum_i (c_i D^(k-i)) w[n+i].
Empirical discrete_up(const Instance& inst, long horizon, long window) {
  const std::size_t k = inst.order();
  Integer d = 1;
  for (const auto& c : inst.coefficients()) d = lcm(d, Integer(c.get_den()));
  Integer l = 1;
  for (const auto& v : inst.initial()) l = lcm(l, Integer(v.get_den()));

  std::vector<Integer> scaled_c(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational ci = inst.coefficients()[i];
    for (std::size_t e = i; e < k; ++e) ci *= d;
    scaled_c[i] = ci.get_num();
  }
  std::vector<Integer> w(k);
  Integer dn = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Rational wi = inst.initial()[i] * l * dn;
    w[i] = wi.get_num();
    dn *= d;
  }

  const long first = horizon - window + 1;
  bool negative = false;
  for (long n = 0; n <= horizon; ++n) {
    const Integer& current = w[static_cast<std::size_t>(n) % k];
    if (n >= first && sgn(current) < 0) {
      negative = true;
      break;
    }
    // ring buffer: slot n % k holds w[n]; replace it with w[n+k]
    Integer next = 0;
    for (std::size_t i = 0; i < k; ++i) next -= scaled_c[i] * w[(static_cast<std::size_t>(n) + i) % k];
    w[static_cast<std::size_t>(n) % k] = std::move(next);
  }
  return negative ? Empirical::No : Empirical::Yes;
}

long double inf_norm(const std::vector<long double>& x) {
  long double m = 0;
  for (auto e : x) m = std::max(m, std::fabs(e));
  return m;
}

Empirical continuous_up(const Instance& inst, long horizon, long window, int samples, long double rel_tol) {
  const CompanionFlow flow(inst);
  std::vector<long double> x = flow.initial_state(inst.initial());
  if (inf_norm(x) == 0) return Empirical::Yes;

  // relative error of the normalised state, accumulated additively
  long double rel_error = flow.matrix_error() + 1e-18L;
  const long double max_step = flow.norm() > 0 ? 0.5L / flow.norm() : static_cast<long double>(horizon);
  long double now = 0;
  auto advance_to = [&](long double target) {
    while (now < target) {
      const long double dt = std::min(max_step, target - now);
      long double step_error = 0;
      x = flow.advance(x, dt, &step_error);
      rel_error += step_error + flow.matrix_error() * dt;
      now += dt;
      const long double n = inf_norm(x);
      if (n == 0 || !std::isfinite(n)) return;
      for (auto& e : x) e /= n;
    }
  };

  const long double start = static_cast<long double>(horizon - window);
  const long double gap = static_cast<long double>(window) / samples;
  bool uncertain = false;
  for (int s = 1; s <= samples; ++s) {
    advance_to(start + gap * s);
    const long double norm = inf_norm(x);
    if (norm == 0) return Empirical::Yes;
    if (!std::isfinite(norm)) return Empirical::Inconclusive;
    const long double margin = std::max(rel_tol, rel_error) * norm;
    if (x[0] < -margin) return Empirical::No;
    if (x[0] < 0) uncertain = true;
  }
  return uncertain ? Empirical::Inconclusive : Empirical::Yes;
}

}  // namespace

Empirical empirical_up(const Instance& inst, long horizon, long window, int samples, long double rel_tol) {
  if (!(window > 0 && horizon > window)) throw PreconditionError("need horizon > window > 0");
  if (samples < 1) throw PreconditionError("need at least one sample");
  return inst.mode() == Mode::Discrete ? discrete_up(inst, horizon, window)
                                       : continuous_up(inst, horizon, window, samples, rel_tol);
}

}  // namespace rup
