// Independent reference implementations used only by the tests. Nothing here
// calls into the library's numerics.
#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using std::numbers::e;
using std::numbers::pi;

// Composite Simpson, n even.
template <class F>
auto simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  auto s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * (h / 3);
}

// Composite 5-point Gauss-Legendre; exact for piecewise polynomials of degree
// <= 9 when the breakpoints fall on panel edges. Never samples the endpoints.
template <class F>
double gauss(F f, double a, double b, int panels) {
  static const double x[5] = {0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640, 0.9061798459386640};
  static const double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665, 0.2369268850561891,
                              0.2369268850561891};
  const double h = (b - a) / panels;
  double s = 0;
  for (int i = 0; i < panels; ++i) {
    const double c = a + (i + 0.5) * h;
    for (int j = 0; j < 5; ++j) s += w[j] * f(c + 0.5 * h * x[j]);
  }
  return s * h / 2;
}

// g(x) = P(U_1 + ... + U_m > m x) for m = 1, 2, from the geometry of the
// unit square rather than the truncated-power sum.
inline double g_irwin_hall(int m, double x) {
  if (x <= 0) return 1;
  if (x >= 1) return 0;
  if (m == 1) return 1 - x;
  const double y = 2 * x;  // P(U1 + U2 <= y)
  const double cdf = y <= 1 ? y * y / 2 : 1 - (2 - y) * (2 - y) / 2;
  return 1 - cdf;
}

// H(s) = int_0^inf h(t) t^{s-1} dt split at alpha: the plateau gives alpha^s/s.
inline std::complex<double> mellin_quadrature(int m, double delta, double alpha, std::complex<double> s) {
  auto ramp = [&](double u) {
    return g_irwin_hall(m, u) * std::pow(std::complex<double>(alpha + delta * u), s - 1.0);
  };
  // g is only C^{m-1} at u = 1/2 when m = 2, so split there
  const auto r = simpson(ramp, 0.0, 0.5, 20000) + simpson(ramp, 0.5, 1.0, 20000);
  return std::pow(std::complex<double>(alpha), s) / s + delta * r;
}

// K_n(z, y) by Simpson in t = log v.
inline double bessel_K_simpson(double n, double z, double y) {
  auto f = [&](double t) { return std::exp(n * t - 0.5 * z * (std::exp(t) + std::exp(-t))); };
  const double lo = y > 0 ? std::log(y) : -60.0;
  double hi = std::max(lo, 0.0) + 1;
  while (n * hi - 0.5 * z * std::exp(hi) > -60 - 0.5 * z) hi += 1;
  return 0.5 * simpson(f, lo, hi, 400000);
}

// I_{n,m}(alpha, beta; l) straight from its defining integral.
inline double bessel_I_direct(double n, double m, double alpha, double beta, double l) {
  auto f = [&](double u) {
    const double lb = std::log(beta * u);
    return std::pow(lb, n - 1) * std::pow(u, -m - 1) * std::exp(-alpha / lb);
  };
  boost::math::quadrature::exp_sinh<double> q;
  return q.integrate([&](double t) { return f(l + t); }, 1e-13);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Legendre symbol by Euler's criterion, p odd prime not dividing D.
inline int euler_criterion(std::int64_t D, std::uint64_t p) {
  const std::int64_t r = ((D % std::int64_t(p)) + std::int64_t(p)) % std::int64_t(p);
  const std::uint64_t v = powmod(std::uint64_t(r), (p - 1) / 2, p);
  return v == 1 ? 1 : -1;
}

// Splitting type of p in Q(sqrt D) by counting roots of the minimal polynomial
// mod p: 2 roots split, 0 inert, 1 ramified.
inline int splitting_by_roots(std::int64_t D, std::uint64_t p) {
  const std::int64_t P = std::int64_t(p);
  int roots = 0;
  if (((D % 4) + 4) % 4 == 1) {
    // x^2 - x + (1 - D)/4
    const std::int64_t c = (1 - D) / 4;
    for (std::int64_t x = 0; x < P; ++x)
      if ((((x * x - x + c) % P) + P) % P == 0) ++roots;
  } else {
    // x^2 - D/4
    const std::int64_t c = D / 4;
    for (std::int64_t x = 0; x < P; ++x)
      if ((((x * x - c) % P) + P) % P == 0) ++roots;
  }
  return roots == 2 ? 1 : roots == 0 ? -1 : 0;
}

struct PsiPair {
  double identity = 0, nontrivial = 0, total = 0;
};

// Walk every n <= x, keep prime powers of unramified primes.
inline PsiPair psi_brute(std::int64_t D, std::uint64_t x) {
  PsiPair r;
  for (std::uint64_t n = 2; n <= x; ++n) {
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d <= n; ++d)
      if (n % d == 0) {
        p = d;
        break;
      }
    std::uint64_t q = n;
    int k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    if (q != 1) continue;
    const int t = splitting_by_roots(D, p);
    if (t == 0) continue;
    const double lp = std::log(double(p));
    r.total += lp;
    if (t == 1 || k % 2 == 0)
      r.identity += lp;
    else
      r.nontrivial += lp;
  }
  return r;
}

// ---- second transcription of the l-constants and Y0 (m = 1 only is not
// assumed; every symbol is written out again from the definitions).

struct EllIn {
  int m, n0;
  double M, delta0, logx0, R1, R2, T0, omega0, alpha4;
  double a0_half, a0_one, a0p_two;
  double A1 = 0.228, A2 = 23.108, A3 = 4.520;
};

struct EllOut {
  double l[8];
  double Y0;
};

inline EllOut ells(const EllIn& c) {
  EllOut o{};
  const double d = c.delta0, L = c.logx0, M = c.M, n0 = c.n0, T = c.T0;
  o.l[0] = (2 / std::log(2.0)) * (1 + std::log(1 + d) / L);
  // 1/((1-d) x0)^2 is written as exp(-2 log((1-d) x0))
  const double inv_sq = std::exp(-2 * (std::log(1 - d) + L));
  o.l[1] = (3.1430 + 3 * c.a0_one) / L +
           M * (1 + d / (2 * (1 - d) * L) + inv_sq / L + 48.3969 / L + 11.54 / (n0 * L));
  o.l[2] = 1 + d / (2 * (1 - d) * L);
  o.l[3] = c.alpha4 * ((2 + d) / 2 + std::exp(-0.5 * L)) * c.a0_half / 2;
  const double e4 = -1 + 2 / (c.R1 * n0 * (1 / M + std::log(4.0)));
  o.l[4] = ((2 + d) / 2) * (1 + std::exp(e4 * L)) * (c.a0_one + c.a0p_two) / 2;
  const double lt = std::log(T), lt2 = lt * lt;
  const double inner = 0.683 / pi + 0.92 * c.A1 - std::log(2 * pi * e) / pi * ((T + 1) / (T - 1) - std::log(2.0)) +
                       std::log(pi * e) / pi + c.A1 * std::log(2.0) / 2 + c.A2 * T / (T - 1);
  const double mpart = 1 / (2 * pi) + (T + 1) * std::log(T + 1) / (pi * (T - 1) * lt2) +
                       c.A1 * std::log(T + 1) / ((T - 1) * lt2) + c.A3 * T / (n0 * lt2 * (T - 1)) + inner / lt2;
  const double bracket = (std::log(T - 1) - 1) / (pi * lt2) + c.A1 * T / (lt2 * (T - 1)) +
                         (T + 1) / (pi * (T - 1) * lt2) + M * mpart;
  const double e5 = -1 + 2 / (c.R2 * n0 * (1 / M + lt));
  o.l[5] = (2 + d) / 4 * (1 + std::exp(e5 * L)) * bracket;
  const int m = c.m;
  o.l[6] = (M + 1 / lt) / (m * pi) + 2 * M * c.A1 / T + (2 * c.A1 + M * (c.A1 / (m + 1) + 2 * c.A2 + c.A3)) / (lt * T);
  const double Lm = 1 / M + lt;
  const double kexp = (2.0 * m + 1) / std::sqrt(m + 1.0) - 2 * std::sqrt(double(m));
  o.l[7] = c.omega0 / (pi * std::sqrt(c.R2 * (m + 1))) * std::pow(L, -0.25) * std::exp(-kexp * std::sqrt((m + 1) * Lm)) +
           2 * std::pow(n0, -0.25) / (std::sqrt(pi) * std::pow(m, 1.25) * std::pow(c.R2, 0.75)) *
               (1 + 15 / (16 * std::sqrt(double(m) * (m + 1)) * Lm) + 105 / (512.0 * m * (m + 1) * Lm * Lm));

  // M(delta, m)
  const double Md = std::pow(m * (std::pow(1 + d / m, m + 1) + 1), m);
  const double S = std::sqrt(m * L / (c.R2 * n0));
  const double bracketY = (o.l[0] + o.l[1]) * M / n0 * std::exp(-L + 2 * S) +
                          o.l[2] * M * M / (n0 * n0) * std::exp(-L / 2 + 2 * S) +
                          o.l[3] / L * std::exp(-L / 2 + 2 * S) + o.l[4] * M / (n0 * L) +
                          o.l[5] * M / (4 * m * c.R2 * n0 * n0);
  o.Y0 = bracketY * std::pow(d, m) + o.l[6] * Md / (4 * std::sqrt(m * c.R2)) / std::sqrt(L) * std::exp(-L + 3.5 * S) +
         o.l[7] * Md / 2 * M * std::pow(L, -0.25);
  return o;
}

}  // namespace oracle
