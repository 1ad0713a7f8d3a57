#pragma once

#include "cheb/invariants.hpp"
#include "cheb/zeros.hpp"

namespace cheb {

struct TuningConfig {
  int m = 1;
  double delta0 = 0;
  double omega0 = 1;
  double t0 = 40;
  double T0 = 40;
  double alpha = 0;   // range coefficient
  double x0_log = 0;  // log x0; x0 itself is far beyond double range
  MinkowskiRow row{};
  ZeroFreeConstants zf{};
  // alpha0(1/2), alpha0(1), alpha0'(2) for the row; filled by make()
  double a0_half = 0, a0_one = 0, a0p_two = 0;

  // Fills alpha and log x0 from the row and validates delta0.
  static TuningConfig make(const MinkowskiRow& row, bool beta0_present, double delta0, int m = 1,
                           double t0 = 40, double T0 = 40, double omega0 = 1);

  // Copy with a different delta0 (validated); zero-counting values are reused.
  TuningConfig with_delta(double delta0) const;
};

double range_alpha(double M, double t0, double R1 = kR1, double R2 = kR2);

struct EllConstants {
  double l0, l1, l2, l3, l4, l5, l6, l7;
  double Y0;
};

struct EllLow {
  double l0, l1, l2, l3, l4, l5;
};

EllLow ell_low(const TuningConfig& cfg);

// All eight constants plus Y0 for the configuration.
EllConstants ell_constants(const TuningConfig& cfg);

// The seven summands of Y0 in order; their sum is Y0. Summands carrying
// x0^{-1} underflow to 0 in double, so their logs are kept as well.
struct Y0Terms {
  double t[7];
  double log_t[7];
};
Y0Terms y0_terms(const TuningConfig& cfg, const EllConstants& e);
double y0(const TuningConfig& cfg, const EllConstants& e);

}  // namespace cheb
