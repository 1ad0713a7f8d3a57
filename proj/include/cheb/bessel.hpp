#pragma once

namespace cheb {

// K_n(z, y) = 1/2 int_y^inf v^{n-1} exp(-(z/2)(v + 1/v)) dv.
double bessel_K(double n, double z, double y);

// I_{n,m}(alpha, beta; l) = int_l^inf (log beta u)^{n-1} u^{-m-1} exp(-alpha / log beta u) du,
// evaluated through its K_n representation.
double bessel_I(double n, double m, double alpha, double beta, double l);

// Upper bound for K_2(z, w), valid for every w >= 0.
double k2_bound(double z);

struct BesselArgs {
  double z_m, w_m;
};
// R_{2,L} = R2 n_L throughout.
BesselArgs bessel_args(int m, double R2, int n_L, double log_x, double delta_L, double T);

// (m+1) R2 n_L log^2(Delta_L T) and the matching W(x).
double regime_X(int m, double R2, int n_L, double delta_L, double T);
double regime_W(int m, double R2, int n_L, double delta_L, double log_x);

double ell6(int m, double M, double T0);
double ell7(int m, double M, double R2, double T0, double omega0, double log_x0, int n0);

}  // namespace cheb
