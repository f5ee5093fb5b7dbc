#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nrdcsk/rng.hpp"

namespace nrdcsk {

enum class JammerKind { none, bbj, ptj, tj, swj };

std::string to_string(JammerKind kind);
JammerKind jammer_kind_from_string(const std::string& name);

struct JammerSpec {
  JammerKind kind = JammerKind::none;
  double p_j = 0.0;  // average per-sample jamming power

  // ptj
  double rho = 1.0;  // T_on / (T_on + T_off), in (0, 1]

  // tj
  int m = 1;                                 // number of tones
  std::vector<double> normalized_tone_freqs; // F_m = f_m * T_b
  std::vector<double> tone_phases;           // theta_m in [-pi, pi]

  // swj
  double f_start_norm = 0.0;      // F_start = f_start * T_b
  double f_stop_norm = 0.0;       // F_stop = f_stop * T_b
  double sweep_time_ratio = 1.0;  // T_sw / T_b
  double sweep_phase = 0.0;       // theta_sw

  // Sweep rate dF = (F_stop - F_start) / (T_sw / T_b).
  double sweep_rate() const { return (f_stop_norm - f_start_norm) / sweep_time_ratio; }

  // Sweep period in samples; a bit occupies 2*beta samples.
  std::int64_t sweep_period_samples(int beta) const;

  void validate() const;  // throws std::invalid_argument
};

// i.i.d. zero-mean Gaussian samples with variance p_j.
std::vector<double> bbj_samples(double p_j, std::size_t count, Rng& rng);

struct PtjBit {
  bool jammed = false;
  std::vector<double> samples;
};

// Whole-frame Bernoulli(rho) jam state; while on, Gaussian with variance
// p_j/rho so the long-run average power is p_j.
PtjBit ptj_bit_samples(double p_j, double rho, std::size_t frame_len, Rng& rng);

// Sum of m tones sqrt(2*p_j/m) * sin(pi*k*F_m/beta + theta_m) at sample
// indices k_begin .. k_begin+count-1.
std::vector<double> tj_samples(const JammerSpec& spec, std::uint64_t k_begin,
                               std::size_t count, int beta);

// Linear sweep sqrt(2*p_j) * sin(pi*k*F_start/beta + pi*k^2*dF/(4*beta^2)
// + theta_sw), with k taken modulo the sweep period. Indices are global
// across the bit stream so the sweep runs independently of bit boundaries.
std::vector<double> swj_samples(const JammerSpec& spec, std::uint64_t k_begin,
                                std::size_t count, int beta);

}  // namespace nrdcsk
