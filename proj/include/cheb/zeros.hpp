#pragma once

#include "cheb/invariants.hpp"

namespace cheb {

inline constexpr double kR1 = 20.0;
inline constexpr double kR2 = 12.2411;

// Constants of the N_L(T) estimate with explicit secondary terms.
inline constexpr double kAlpha1 = 0.228;
inline constexpr double kAlpha2 = 23.108;
inline constexpr double kAlpha3 = 4.520;

struct ZeroFreeConstants {
  double R1 = kR1;
  double R2 = kR2;
  double alpha4;
  bool beta0_present;
  int a_beta0;

  static ZeroFreeConstants make(bool beta0_present) {
    return {kR1, kR2, beta0_present ? 1.7 : 2.0, beta0_present, beta0_present ? 1 : 2};
  }
};

struct C123 {
  double c1, c2, c3;
};

C123 c123(double a, double eps, double T);

// min over eps > 0 of c1 + c2 M + c3 / log d0, with c2, c3 taken at T = 0.
double alpha0(double T, const MinkowskiRow& row);
// Same with the minimizing eps reported.
double alpha0(double T, const MinkowskiRow& row, double* eps_star);

double alpha0_prime(double T, const MinkowskiRow& row);

struct WindowCoeffs {
  double b1, b2, b3, b4;
};
inline constexpr double kEps0 = 1.1814;
// Stored published values and the raw recomputation (within 1e-4 of them).
WindowCoeffs window_coeffs();
WindowCoeffs window_coeffs_raw();

struct PE {
  double P, E;
};
PE P_E_L(double T, const FieldParams& f);

double Q_kernel(double u, double t, const FieldParams& f);
// Regrouped form of Q in powers of log d_L and n_L.
double Q_kernel_regrouped(double u, double t, const FieldParams& f);
double Q_kernel_du(double u, const FieldParams& f);

// omega(t) = (pi/t)(2 alpha1 + (2 alpha2 + alpha3) / log(sqrt3 t)).
double solve_omega0(double t0);
double solve_t0(double omega0);

}  // namespace cheb
