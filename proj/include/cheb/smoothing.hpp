#pragma once

#include <complex>

namespace cheb {

enum class Endpoint { LOWER, UPPER };  // alpha = 1 - delta, alpha = 1

struct SmoothingParams {
  int m;
  double delta;
  Endpoint endpoint;

  double alpha() const { return endpoint == Endpoint::UPPER ? 1.0 : 1.0 - delta; }
};

// Rosser weight g on [0,1]; derivative g' for the variation check.
double weight_g(double x, const SmoothingParams& p);
double weight_g_prime(double x, const SmoothingParams& p);

// Cutoff h: 1 on [0, alpha], g((t-alpha)/delta) on the ramp, 0 past alpha+delta.
double weight_h(double t, const SmoothingParams& p);

// Mellin transform of h in closed form, continued to all s != 0.
std::complex<double> mellin_H(std::complex<double> s, const SmoothingParams& p);

// M(delta, m) with M(delta, 0) = 1 + delta/2.
double m_bound(double delta, int m);

}  // namespace cheb
