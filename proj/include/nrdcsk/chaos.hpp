#pragma once

#include <cstddef>
#include <vector>

#include "nrdcsk/rng.hpp"

namespace nrdcsk::chaos {

// Normalization scale: the raw logistic map has second moment 1/2 under its
// invariant (arcsine) density; scaling by sqrt(2) makes per-sample power 1.
inline constexpr double kNormScale = 1.4142135623730951;

inline constexpr std::size_t kDefaultBurnIn = 1000;

struct ChaoticSequence {
  std::vector<double> samples;
  double seed_state = 0.0;
  bool normalized = false;
};

// One iteration of x <- 1 - 2x^2. Throws std::domain_error if |x| > 1.
double logistic_next(double x);

// Iterates the map burn_in times from seed, then emits count samples scaled
// by kNormScale. Throws std::invalid_argument for |seed| >= 1 or a seed on a
// fixed point of the map (0.5, -1).
ChaoticSequence generate(double seed, std::size_t count,
                         std::size_t burn_in = kDefaultBurnIn);

// Uniform seed in (-1, 1) with a 1e-6 guard band around 0.5, -1, and 0.
double draw_seed(Rng& rng);

}  // namespace nrdcsk::chaos
