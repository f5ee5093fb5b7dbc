#pragma once

namespace nrdcsk::analysis {

// One operating point of the closed-form BER expressions. jsr_db = -inf
// means no jammer (p_j = 0). The formulas are well defined for any p >= 1;
// the beta-mod-p constraint belongs to the modem, not to these expressions.
struct AnalysisPoint {
  double ebn0_db = 0.0;
  double jsr_db = 0.0;
  int beta = 200;
  int p = 1;
  double rho = 1.0;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

struct OptimalRho {
  double rho_star = 1.0;
  double ber_star = 0.0;
};

// Partial-time jamming BER: rho-weighted sum of the jammed and unjammed
// Gaussian-approximation terms. Result in [0, 1/2].
double ber_ptj(const AnalysisPoint& pt);

// Broad-band jamming BER: the rho = 1 special case of ber_ptj.
double ber_bbj(AnalysisPoint pt);

// Large-P limit of ber_ptj (the beta/P correction terms dropped).
double ber_lower_bound(const AnalysisPoint& pt);

// Mean and variance of the decision variable for a jammed or unjammed bit.
Moments decision_moments(const AnalysisPoint& pt, bool jammed);

// Jammer-optimal duty factor: argmax of ber_ptj over rho in [1e-4, 1],
// grid bracketing plus golden-section refinement.
OptimalRho optimal_rho(double ebn0_db, double jsr_db, int beta, int p);

}  // namespace nrdcsk::analysis
