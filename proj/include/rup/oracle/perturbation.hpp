#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rup/lds/instance.hpp"

namespace rup {

struct PerturbationSample {
  Instance base;
  Rational epsilon;
  std::uint64_t seed;
  std::vector<Instance> instances;
};

/// The 4k axis corners (each of the 2k entries moved by +-epsilon alone),
/// followed by `count` instances drawn uniformly from the grid of step
/// epsilon / 2^16 inside the closed epsilon-box. Deterministic in `seed`.
/// Throws PreconditionError unless epsilon > 0 and count >= 0.
PerturbationSample sample_perturbations(const Instance& inst, const Rational& epsilon, long count,
                                        std::uint64_t seed);

/// The 4k axis corners only.
std::vector<Instance> axis_corners(const Instance& inst, const Rational& epsilon);

enum class Empirical { Yes, No, Inconclusive };

std::string_view to_string(Empirical e);

/// Finite-horizon check of ultimate positivity: looks at the values in the
/// trailing window (horizon - window, horizon]. Discrete: the integer indices,
/// exact. Continuous: `samples` equally spaced times, simulated in long
/// double; a value whose magnitude is within the accumulated error margin of
/// zero (relative to the state norm, at least `rel_tol`) and negative counts
/// as Inconclusive rather than No.
/// Throws PreconditionError unless horizon > window > 0.
Empirical empirical_up(const Instance& inst, long horizon, long window, int samples = 512,
                       long double rel_tol = 1e-9L);

}  // namespace rup
