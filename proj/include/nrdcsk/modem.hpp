#pragma once

#include <span>
#include <vector>

namespace nrdcsk {

// beta: samples per half-bit; p: times each distinct chaotic sample is
// repeated. The receiver averages blocks of p, so beta must divide by p.
struct ModemParams {
  int beta = 200;
  int p = 1;

  int distinct() const { return beta / p; }
  int frame_len() const { return 2 * beta; }
  void validate() const;  // throws std::invalid_argument
};

struct NrDcskFrame {
  std::vector<double> samples;           // 2*beta amplitudes
  int bit = +1;                          // +1 or -1
  std::vector<double> distinct_samples;  // the beta/p underlying values
};

struct DecisionRecord {
  double decision_variable = 0.0;
  int decoded_bit = +1;
};

// Reference half: each x repeated p times; information half: bit * reference.
NrDcskFrame modulate(int bit, std::span<const double> x,
                     const ModemParams& params);

// Mean of each consecutive block of p samples; output length 2*beta/p.
std::vector<double> block_average(std::span<const double> received,
                                  const ModemParams& params);

// Correlates the block-averaged halves and slices at zero.
// Ties (decision variable exactly 0) decode as +1.
DecisionRecord demodulate(std::span<const double> received,
                          const ModemParams& params);

}  // namespace nrdcsk
