#include "nrdcsk/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace nrdcsk {

LinkBudget calibrate(double ebn0_db, double jsr_db, int beta) {
  if (beta < 1) {
    throw std::invalid_argument("calibrate: beta must be >= 1");
  }
  LinkBudget budget;
  budget.ebn0_db = ebn0_db;
  budget.jsr_db = jsr_db;
  budget.e_b = 2.0 * beta * budget.signal_power;
  budget.n0 = std::isinf(ebn0_db) && ebn0_db > 0
                  ? 0.0
                  : budget.e_b / std::pow(10.0, ebn0_db / 10.0);
  budget.p_j = std::isinf(jsr_db) && jsr_db < 0
                   ? 0.0
                   : budget.signal_power * std::pow(10.0, jsr_db / 10.0);
  return budget;
}

std::vector<double> apply_channel(std::span<const double> frame,
                                  std::span<const double> jam,
                                  const LinkBudget& budget, Rng& rng) {
  if (frame.size() != jam.size()) {
    throw std::invalid_argument("apply_channel: length mismatch");
  }
  const double sigma = std::sqrt(budget.n0 / 2.0);
  std::vector<double> out(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    out[i] = frame[i] + jam[i] + sigma * rng.gaussian();
  }
  return out;
}

}  // namespace nrdcsk
