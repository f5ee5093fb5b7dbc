#include "nrdcsk/chaos.hpp"

#include <cmath>
#include <stdexcept>

namespace nrdcsk::chaos {

double logistic_next(double x) {
  if (std::abs(x) > 1.0) {
    throw std::domain_error("logistic_next: |x| > 1");
  }
  return 1.0 - 2.0 * x * x;
}

ChaoticSequence generate(double seed, std::size_t count, std::size_t burn_in) {
  if (std::abs(seed) >= 1.0 || seed == 0.5) {
    throw std::invalid_argument(
        "chaos::generate: seed must be in (-1, 1) and off the fixed points");
  }
  double x = seed;
  for (std::size_t i = 0; i < burn_in; ++i) {
    x = 1.0 - 2.0 * x * x;
  }
  ChaoticSequence seq;
  seq.seed_state = seed;
  seq.normalized = true;
  seq.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    seq.samples[i] = kNormScale * x;
    x = 1.0 - 2.0 * x * x;
  }
  return seq;
}

double draw_seed(Rng& rng) {
  constexpr double kGuard = 1e-6;
  for (;;) {
    const double s = rng.uniform_symmetric();
    if (std::abs(s) >= 1.0 - kGuard) continue;
    if (std::abs(s - 0.5) < kGuard) continue;
    if (std::abs(s) < kGuard) continue;
    return s;
  }
}

}  // namespace nrdcsk::chaos
