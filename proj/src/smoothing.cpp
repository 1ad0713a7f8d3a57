#include "cheb/smoothing.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cheb {

namespace {

void check(const SmoothingParams& p) {
  if (p.m < 1) throw std::domain_error("smoothing weight needs m >= 1");
  if (!(p.delta > 0 && p.delta < 1)) throw std::domain_error("delta must lie in (0,1)");
}

double binom(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Signed knot spacing; negative for the lower endpoint.
double step(const SmoothingParams& p) { return (p.delta + 2 * (p.alpha() - 1)) / p.m; }

double knot(const SmoothingParams& p, int j) { return 1 + step(p) * j; }

double sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Ramp part of h and of h' from the truncated-power sum.
double ramp(double x, const SmoothingParams& p, bool deriv) {
  const double st = step(p);
  double acc = 0;
  for (int j = 0; j <= p.m; ++j) {
    const double c = knot(p, j);
    if (!(x < c)) continue;
    const double u = (c - x) / st;
    const double a = sign(j + p.m) * binom(p.m, j);
    if (deriv)
      acc += a * p.m * std::pow(u, p.m - 1) * (-1 / st);
    else
      acc += a * std::pow(u, p.m);
  }
  return acc / factorial(p.m);
}

}  // namespace

double weight_h(double t, const SmoothingParams& p) {
  check(p);
  const double a = p.alpha();
  if (t <= a) return 1;
  if (t >= a + p.delta) return 0;
  return ramp(t, p, false);
}

double weight_g(double x, const SmoothingParams& p) {
  check(p);
  if (x <= 0) return 1;
  if (x >= 1) return 0;
  return ramp(p.alpha() + p.delta * x, p, false);
}

double weight_g_prime(double x, const SmoothingParams& p) {
  check(p);
  if (x <= 0 || x >= 1) return 0;
  return p.delta * ramp(p.alpha() + p.delta * x, p, true);
}

std::complex<double> mellin_H(std::complex<double> s, const SmoothingParams& p) {
  check(p);
  if (s == std::complex<double>(0, 0)) throw std::domain_error("mellin_H: pole at s = 0");
  const int m = p.m;
  const double stm = std::pow(step(p), m);

  std::vector<double> a(m + 1), logc(m + 1);
  for (int j = 0; j <= m; ++j) {
    a[j] = sign(j + m) * binom(m, j);
    logc[j] = std::log(knot(p, j));
  }

  // s = -k for 1 <= k <= m is removable: take N'(-k) / D'(-k).
  for (int k = 1; k <= m; ++k) {
    if (std::abs(s + double(k)) < 1e-8) {
      std::complex<double> num = 0;
      for (int j = 0; j <= m; ++j) num += a[j] * std::exp((double(m) + s) * logc[j]) * logc[j];
      std::complex<double> den = stm;
      for (int i = 0; i <= m; ++i)
        if (i != k) den *= (s + double(i));
      return num / den;
    }
  }

  std::complex<double> num = 0;
  for (int j = 0; j <= m; ++j) num += a[j] * std::exp((double(m) + s) * logc[j]);
  std::complex<double> den = stm;
  for (int i = 0; i <= m; ++i) den *= (s + double(i));
  return num / den;
}

double m_bound(double delta, int m) {
  if (!(delta > 0 && delta < 1)) throw std::domain_error("delta must lie in (0,1)");
  if (m < 0) throw std::domain_error("m must be >= 0");
  if (m == 0) return 1 + delta / 2;
  return std::pow(m * (std::pow(1 + delta / m, m + 1) + 1), m);
}

}  // namespace cheb
