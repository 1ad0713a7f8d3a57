#include "cheb/bessel.hpp"

#include "cheb/zeros.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cheb {

using std::numbers::pi;

double bessel_K(double n, double z, double y) {
  if (!(z > 0) || !(y >= 0)) throw std::domain_error("bessel_K needs z > 0, y >= 0");
  // log of the integrand; unimodal with its peak at v*
  auto phi = [&](double v) { return (n - 1) * std::log(v) - 0.5 * z * (v + 1 / v); };
  const double vstar = ((n - 1) + std::sqrt((n - 1) * (n - 1) + z * z)) / z;
  const double left = std::max(y, 1e-300);
  const double vpk = std::max(left, vstar);
  const double ref = phi(vpk);

  // truncate once the integrand drops below 1e-18 of its peak
  const double cut = std::log(1e-18);
  double hi = vpk + 1;
  while (phi(hi) - ref > cut) hi = vpk + 2 * (hi - vpk);

  auto f = [&](double v) { return v <= 0 ? 0.0 : std::exp(phi(v) - ref); };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double err = 0, total = 0;
  if (left < vpk) total += GK::integrate(f, y, vpk, 20, 1e-13, &err);
  total += GK::integrate(f, vpk, hi, 20, 1e-13, &err);
  if (!std::isfinite(total)) throw std::runtime_error("bessel_K: quadrature failed");
  return 0.5 * total * std::exp(ref);
}

double bessel_I(double n, double m, double alpha, double beta, double l) {
  if (!(beta * l > 1)) throw std::domain_error("bessel_I needs beta * l > 1");
  if (!(alpha > 0) || !(m > 0)) throw std::domain_error("bessel_I needs alpha, m > 0");
  const double z = 2 * std::sqrt(alpha * m);
  const double y = std::sqrt(m / alpha) * std::log(beta * l);
  return 2 * std::pow(beta, m) * std::pow(alpha / m, n / 2) * bessel_K(n, z, y);
}

double k2_bound(double z) {
  return std::sqrt(pi / 2) * std::exp(-z) / std::sqrt(z) *
         (1 + 15 / (8 * z) + 105 / (128 * z * z));
}

BesselArgs bessel_args(int m, double R2, int n_L, double log_x, double delta_L, double T) {
  const double R2L = R2 * n_L;
  return {2 * std::sqrt(m * log_x / R2L), std::sqrt(m * R2L / log_x) * std::log(delta_L * T)};
}

double regime_X(int m, double R2, int n_L, double delta_L, double T) {
  const double l = std::log(delta_L * T);
  return (m + 1) * R2 * n_L * l * l;
}

double regime_W(int m, double R2, int n_L, double delta_L, double log_x) {
  return std::exp(std::sqrt(log_x / (R2 * n_L * (m + 1)))) / delta_L;
}

double ell6(int m, double M, double T0) {
  if (m < 1 || !(T0 > 4)) throw std::domain_error("ell6 needs m >= 1, T0 > 4");
  const double a1 = kAlpha1, a2 = kAlpha2, a3 = kAlpha3;
  const double lT = std::log(T0);
  return (M + 1 / lT) / (m * pi) + 2 * M * a1 / T0 +
         (2 * a1 + M * (a1 / (m + 1) + 2 * a2 + a3)) / (lT * T0);
}

double ell7(int m, double M, double R2, double T0, double omega0, double log_x0, int n0) {
  if (m < 1 || !(T0 > 4) || !(log_x0 > 0) || n0 < 2)
    throw std::domain_error("ell7: parameter out of range");
  const double L = 1 / M + std::log(T0);
  const double k = (2.0 * m + 1) / std::sqrt(m + 1.0) - 2 * std::sqrt(double(m));
  const double first = omega0 / (pi * std::sqrt(R2 * (m + 1))) * std::pow(log_x0, -0.25) *
                       std::exp(-k * std::sqrt((m + 1) * L));
  const double second = 2 * std::pow(n0, -0.25) / (std::sqrt(pi) * std::pow(m, 1.25) * std::pow(R2, 0.75)) *
                        (1 + 15 / (16 * std::sqrt(double(m) * (m + 1)) * L) +
                         105 / (512.0 * m * (m + 1) * L * L));
  return first + second;
}

}  // namespace cheb
