#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nrdcsk/channel.hpp"
#include "nrdcsk/jammers.hpp"
#include "nrdcsk/modem.hpp"

namespace nrdcsk::engine {

struct StopRule {
  std::int64_t target_errors = 100;
  std::int64_t max_bits = 100'000'000;
};

struct Scenario {
  ModemParams modem;
  JammerSpec jammer;
  double ebn0_db = 0.0;
  double jsr_db = 0.0;
  std::uint64_t seed = 0;
  StopRule stop;

  void validate() const;
};

struct BerEstimate {
  std::int64_t bits = 0;
  std::int64_t errors = 0;
  double ber = 0.0;
  double ci_low = 0.0;   // 95% Wilson
  double ci_high = 0.0;
  std::optional<double> analytic_ref;
};

// Wilson score interval for errors/bits at confidence level z (1.96 ~ 95%).
std::pair<double, double> wilson_interval(std::int64_t errors,
                                          std::int64_t bits, double z);

// Monte-Carlo BER over the modulate -> jam -> AWGN -> demodulate chain.
// Stops at target_errors or max_bits, whichever first. Every random draw
// is keyed by (seed, bit index, purpose), so (bits, errors) is identical
// for any worker count.
BerEstimate run(const Scenario& scenario, int workers = 0);

// Sweep axes accepted by sweep() and the CLI.
bool is_sweep_axis(const std::string& name);

// Copy of base with one named parameter replaced. Throws on unknown axis.
Scenario apply_axis(const Scenario& base, const std::string& axis,
                    double value);

// One estimate per value, each under a derived sub-seed; ordering preserved.
std::vector<BerEstimate> sweep(const Scenario& base, const std::string& axis,
                               const std::vector<double>& values,
                               int workers = 0);

}  // namespace nrdcsk::engine
