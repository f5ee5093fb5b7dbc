#include "nrdcsk/modem.hpp"

#include <stdexcept>

namespace nrdcsk {

void ModemParams::validate() const {
  if (beta < 1 || p < 1) {
    throw std::invalid_argument("ModemParams: beta and p must be positive");
  }
  if (beta % p != 0) {
    throw std::invalid_argument("ModemParams: beta mod p must be 0");
  }
}

NrDcskFrame modulate(int bit, std::span<const double> x,
                     const ModemParams& params) {
  params.validate();
  if (bit != +1 && bit != -1) {
    throw std::invalid_argument("modulate: bit must be +1 or -1");
  }
  if (static_cast<int>(x.size()) != params.distinct()) {
    throw std::invalid_argument("modulate: need beta/p chaotic samples");
  }
  NrDcskFrame frame;
  frame.bit = bit;
  frame.distinct_samples.assign(x.begin(), x.end());
  frame.samples.resize(params.frame_len());
  const int beta = params.beta;
  for (int k = 0; k < beta; ++k) {
    const double v = x[k / params.p];
    frame.samples[k] = v;
    frame.samples[k + beta] = bit * v;
  }
  return frame;
}

std::vector<double> block_average(std::span<const double> received,
                                  const ModemParams& params) {
  params.validate();
  if (static_cast<int>(received.size()) != params.frame_len()) {
    throw std::invalid_argument("block_average: need 2*beta samples");
  }
  const int blocks = params.frame_len() / params.p;
  std::vector<double> out(blocks);
  const double inv_p = 1.0 / params.p;
  for (int k = 0; k < blocks; ++k) {
    double acc = 0.0;
    for (int j = 0; j < params.p; ++j) {
      acc += received[k * params.p + j];
    }
    out[k] = acc * inv_p;
  }
  return out;
}

DecisionRecord demodulate(std::span<const double> received,
                          const ModemParams& params) {
  const std::vector<double> avg = block_average(received, params);
  const int half = params.distinct();
  double corr = 0.0;
  for (int k = 0; k < half; ++k) {
    corr += avg[k] * avg[k + half];
  }
  DecisionRecord rec;
  rec.decision_variable = corr;
  rec.decoded_bit = corr < 0.0 ? -1 : +1;
  return rec;
}

}  // namespace nrdcsk
