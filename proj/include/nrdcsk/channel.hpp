#pragma once

#include <span>
#include <vector>

#include "nrdcsk/modem.hpp"
#include "nrdcsk/rng.hpp"

namespace nrdcsk {

// Per-sample link powers. Signal power is 1 by the chaos normalization, so
// E_b = 2*beta deterministically and JSR in dB maps directly to p_j.
struct LinkBudget {
  double signal_power = 1.0;
  double e_b = 0.0;
  double n0 = 0.0;  // per-sample AWGN variance is n0/2
  double p_j = 0.0;
  double ebn0_db = 0.0;
  double jsr_db = 0.0;
};

// ebn0_db = +inf gives n0 = 0; jsr_db = -inf gives p_j = 0.
LinkBudget calibrate(double ebn0_db, double jsr_db, int beta);

// r = s + j + n with i.i.d. Gaussian n of variance n0/2.
std::vector<double> apply_channel(std::span<const double> frame,
                                  std::span<const double> jam,
                                  const LinkBudget& budget, Rng& rng);

}  // namespace nrdcsk
