#include "cheb/zeros.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cheb {

using std::numbers::e;
using std::numbers::pi;

C123 c123(double a, double eps, double T) {
  if (!(a > 0) || !(eps > 0)) throw std::domain_error("c123 needs a > 0, eps > 0");
  const double c1 = ((1 + eps) * (1 + eps) + a * a) / (2 * eps);
  const double c2 = c1 * std::log(2 + eps + std::abs(T)) + 2 * c1 * (1 / eps + 539.0 / 268.0);
  const double c3 = 2 * c1 *
                    ((1 + eps) / std::sqrt((1 + eps) * (1 + eps) + T * T) +
                     eps / std::sqrt(eps * eps + T * T));
  return {c1, c2, c3};
}

namespace {

double B(double a, double eps, const MinkowskiRow& r) {
  const C123 c = c123(a, eps, 0);
  return c.c1 + c.c2 * r.M + c.c3 / r.log_d0;
}

}  // namespace

double alpha0(double T, const MinkowskiRow& row, double* eps_star) {
  if (!(T > 0)) throw std::domain_error("alpha0 needs T > 0");
  constexpr double lo = 1e-3, hi = 50.0;
  constexpr int N = 100000;
  // log-spaced grid guards against a second local minimum, then Brent polishes
  const double r = std::log(hi / lo) / (N - 1);
  int best = 0;
  double fbest = B(T, lo, row);
  for (int i = 1; i < N; ++i) {
    const double f = B(T, lo * std::exp(r * i), row);
    if (f < fbest) {
      fbest = f;
      best = i;
    }
  }
  const double a = lo * std::exp(r * std::max(best - 1, 0));
  const double b = lo * std::exp(r * std::min(best + 1, N - 1));
  auto res = boost::math::tools::brent_find_minima([&](double x) { return B(T, x, row); }, a, b,
                                                   std::numeric_limits<double>::digits / 2);
  if (!std::isfinite(res.second)) throw std::runtime_error("alpha0: minimizer failed");
  if (res.second > fbest) res = {lo * std::exp(r * best), fbest};
  if (eps_star) *eps_star = res.first;
  return res.second;
}

double alpha0(double T, const MinkowskiRow& row) { return alpha0(T, row, nullptr); }

double alpha0_prime(double T, const MinkowskiRow& row) {
  if (!(T >= 1)) throw std::domain_error("alpha0_prime needs T >= 1");
  return T / pi + kAlpha1 +
         row.M * (T / pi * std::log(T / (2 * pi * e)) + kAlpha1 * std::log(T) + kAlpha2) +
         kAlpha3 / row.log_d0;
}

WindowCoeffs window_coeffs_raw() {
  const double c1 = c123(1, kEps0, 0).c1;
  const double b1 = 2 * c1 * (1 + std::log(1 + (2 + kEps0) / 3) / std::log(3.0));
  const double b2 = 4 * c1 * (1 / kEps0 + 539.0 / 268.0);
  const double b3 = 2 * c1;
  const double b4 = 2 * c123(1, kEps0, 3).c3;
  return {b1, b2, b3, b4};
}

WindowCoeffs window_coeffs() {
  // published values; b1 and b3 are nearest-rounded, not rounded up
  return {8.0818, 27.8581, 4.8743, 9.3052};
}

PE P_E_L(double T, const FieldParams& f) {
  if (!(T >= 1)) throw std::domain_error("P_E_L needs T >= 1");
  const double P = T / pi * (f.log_dL + f.n_L * std::log(T / (2 * pi * e)));
  const double E = kAlpha1 * (f.log_dL + f.n_L * std::log(T)) + kAlpha2 * f.n_L + kAlpha3;
  return {P, E};
}

double Q_kernel(double u, double t, const FieldParams& f) {
  if (!(u >= t && t >= 1)) throw std::domain_error("Q_kernel needs u >= t >= 1");
  const double n = f.n_L, D = f.delta_L;
  return n * u / pi * std::log(D * u / (2 * pi * e)) - n * t / pi * std::log(D * t / (2 * pi * e)) +
         2 * kAlpha1 * n * std::log(D * std::sqrt(u * t)) + 2 * kAlpha2 * n + 2 * kAlpha3;
}

double Q_kernel_regrouped(double u, double t, const FieldParams& f) {
  if (!(u >= t && t >= 1)) throw std::domain_error("Q_kernel needs u >= t >= 1");
  const double ld = f.log_dL, n = f.n_L;
  return ((u - t) / pi + 2 * kAlpha1) * ld +
         (u / pi * std::log(u / (2 * pi * e)) - t / pi * std::log(t / (2 * pi * e)) +
          kAlpha1 * std::log(u * t) + 2 * kAlpha2) *
             n +
         2 * kAlpha3;
}

double Q_kernel_du(double u, const FieldParams& f) {
  return f.n_L / pi * std::log(f.delta_L * u / (2 * pi)) + kAlpha1 * f.n_L / u;
}

double solve_omega0(double t0) {
  const double lo = 1 / std::sqrt(3.0);
  if (!(t0 > lo)) throw std::domain_error("solve_omega0 needs t0 > 1/sqrt(3)");
  return pi / t0 * (2 * kAlpha1 + (2 * kAlpha2 + kAlpha3) / std::log(std::sqrt(3.0) * t0));
}

double solve_t0(double omega0) {
  if (!(omega0 >= 1)) throw std::domain_error("solve_t0 needs omega0 >= 1");
  // omega(t) decreases on (1/sqrt3, inf); bracket and bisect
  double lo = (1 / std::sqrt(3.0)) * (1 + 1e-12), hi = 2.0;
  while (solve_omega0(hi) > omega0) {
    hi *= 2;
    if (hi > 1e300) throw std::runtime_error("solve_t0: no bracket");
  }
  auto g = [&](double t) { return solve_omega0(t) - omega0; };
  auto tol = [](double a, double b) { return std::abs(a - b) <= 1e-14 * std::abs(b); };
  auto r = boost::math::tools::bisect(g, lo, hi, tol);
  return 0.5 * (r.first + r.second);
}

}  // namespace cheb
