#include "nrdcsk/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "nrdcsk/channel.hpp"

namespace nrdcsk::analysis {

namespace {

// 0.5 * erfc(1/sqrt(v)); v = 0 is the noiseless limit.
double half_erfc_inv_sqrt(double v) {
  if (v <= 0.0) return 0.0;
  return 0.5 * std::erfc(1.0 / std::sqrt(v));
}

void check_point(const AnalysisPoint& pt) {
  if (pt.beta < 1 || pt.p < 1) {
    throw std::invalid_argument("analysis: beta and p must be positive");
  }
  if (!(pt.rho > 0.0 && pt.rho <= 1.0)) {
    throw std::domain_error("analysis: rho must be in (0, 1]");
  }
}

}  // namespace

double ber_ptj(const AnalysisPoint& pt) {
  check_point(pt);
  const LinkBudget lb = calibrate(pt.ebn0_db, pt.jsr_db, pt.beta);
  const double eb = lb.e_b;
  const double q_on = lb.p_j / pt.rho + lb.n0 / 2.0;
  const double arg_on =
      8.0 * q_on / eb + 8.0 * pt.beta * q_on * q_on / (pt.p * eb * eb);
  const double arg_off = 4.0 * lb.n0 / eb +
                         2.0 * pt.beta * lb.n0 * lb.n0 / (pt.p * eb * eb);
  return pt.rho * half_erfc_inv_sqrt(arg_on) +
         (1.0 - pt.rho) * half_erfc_inv_sqrt(arg_off);
}

double ber_bbj(AnalysisPoint pt) {
  pt.rho = 1.0;
  return ber_ptj(pt);
}

double ber_lower_bound(const AnalysisPoint& pt) {
  check_point(pt);
  const LinkBudget lb = calibrate(pt.ebn0_db, pt.jsr_db, pt.beta);
  const double eb = lb.e_b;
  const double arg_on = 8.0 / eb * (lb.p_j / pt.rho + lb.n0 / 2.0);
  const double arg_off = 4.0 * lb.n0 / eb;
  return pt.rho * half_erfc_inv_sqrt(arg_on) +
         (1.0 - pt.rho) * half_erfc_inv_sqrt(arg_off);
}

Moments decision_moments(const AnalysisPoint& pt, bool jammed) {
  check_point(pt);
  const LinkBudget lb = calibrate(pt.ebn0_db, pt.jsr_db, pt.beta);
  const double e_p = lb.e_b / (2.0 * pt.p);
  const double p = pt.p;
  const double beta = pt.beta;
  const double n0 = lb.n0;
  const double pj = jammed ? lb.p_j : 0.0;
  Moments m;
  m.mean = e_p;
  m.variance = 2.0 * e_p * pj / (pt.rho * p)                    // I1 + I2
               + beta * pj * pj / (pt.rho * pt.rho * p * p * p) // I3
               + e_p * n0 / p                                   // N1 + N2
               + beta * pj * n0 / (pt.rho * p * p * p)          // N3 + N4
               + beta * n0 * n0 / (4.0 * p * p * p);            // N5
  return m;
}

OptimalRho optimal_rho(double ebn0_db, double jsr_db, int beta, int p) {
  AnalysisPoint pt{ebn0_db, jsr_db, beta, p, 1.0};
  const auto objective = [&pt](double rho) {
    pt.rho = rho;
    return ber_ptj(pt);
  };

  constexpr double kLo = 1e-4;
  constexpr int kGridPoints = 1000;

  // Coarse grid to bracket the global argmax
  int best = 0;
  double best_val = -1.0;
  const auto grid_rho = [&](int i) {
    return kLo + (1.0 - kLo) * i / kGridPoints;
  };
  for (int i = 0; i <= kGridPoints; ++i) {
    const double v = objective(grid_rho(i));
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = grid_rho(best > 0 ? best - 1 : 0);
  double b = grid_rho(best < kGridPoints ? best + 1 : kGridPoints);

  // Golden-section refinement (maximization)
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > 1e-7) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
  }

  OptimalRho result;
  result.rho_star = 0.5 * (a + b);
  result.ber_star = objective(result.rho_star);
  return result;
}

}  // namespace nrdcsk::analysis
