#include "cheb/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cheb/bessel.hpp"
#include "cheb/smoothing.hpp"

namespace cheb {

using std::numbers::e;
using std::numbers::pi;

double range_alpha(double M, double t0, double R1, double R2) {
  const double a = 4 * R1 * R1 / R2 * std::pow(std::log(4.0) * M + 1, 2);
  const double b = 4 * R2 * std::pow(std::log(t0) * M + 1, 2);
  return std::max(a, b);
}

TuningConfig TuningConfig::make(const MinkowskiRow& row, bool beta0_present, double delta0, int m,
                                double t0, double T0, double omega0) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  if (!(T0 >= t0 && t0 > 4)) throw std::domain_error("need T0 >= t0 > 4");
  TuningConfig c;
  c.m = m;
  c.delta0 = delta0;
  c.omega0 = omega0;
  c.t0 = t0;
  c.T0 = T0;
  c.row = row;
  c.zf = ZeroFreeConstants::make(beta0_present);
  c.alpha = range_alpha(row.M, t0, c.zf.R1, c.zf.R2);
  c.x0_log = c.alpha * m * row.n0 / (row.M * row.M);
  c.a0_half = alpha0(0.5, row);
  c.a0_one = alpha0(1.0, row);
  c.a0p_two = alpha0_prime(2.0, row);
  return c.with_delta(delta0);
}

TuningConfig TuningConfig::with_delta(double d) const {
  // delta0 <= 1 - sqrt(2)/x0
  const double cap = 1 - std::sqrt(2.0) * std::exp(-x0_log);
  // cap rounds to 1 in double once x0 is large
  if (!(d > 0 && d < 1 && d <= cap)) throw std::domain_error("delta0 outside (0, 1 - sqrt2/x0]");
  TuningConfig c = *this;
  c.delta0 = d;
  return c;
}

EllLow ell_low(const TuningConfig& c) {
  const double L = c.x0_log, d = c.delta0, M = c.row.M;
  const int n0 = c.row.n0;
  const double a05 = c.a0_half, a1 = c.a0_one, a2p = c.a0p_two;

  EllLow r;
  r.l0 = 2 / std::log(2.0) * (1 + std::log1p(d) / L);
  r.l1 = (3.1430 + 3 * a1) / L +
         M * (1 + d / (2 * (1 - d) * L) + std::exp(-2 * (std::log1p(-d) + L)) / L + 48.3969 / L +
              11.54 / (n0 * L));
  r.l2 = 1 + d / (2 * (1 - d) * L);
  r.l3 = c.zf.alpha4 * ((2 + d) / 2 + std::exp(-L / 2)) * a05 / 2;
  r.l4 = (2 + d) / 2 * (1 + std::exp(L * (-1 + 2 / (c.zf.R1 * n0 * (1 / M + std::log(4.0)))))) *
         (a1 + a2p) / 2;

  const double T0 = c.T0, lT = std::log(T0), lT2 = lT * lT;
  const double A1 = kAlpha1, A2 = kAlpha2, A3 = kAlpha3;
  const double inner = 0.683 / pi + 0.92 * A1 -
                       std::log(2 * pi * e) / pi * ((T0 + 1) / (T0 - 1) - std::log(2.0)) +
                       std::log(pi * e) / pi + A1 * std::log(2.0) / 2 + A2 * T0 / (T0 - 1);
  const double bracket =
      (std::log(T0 - 1) - 1) / (pi * lT2) + A1 * T0 / (lT2 * (T0 - 1)) +
      (T0 + 1) / (pi * (T0 - 1) * lT2) +
      M * (1 / (2 * pi) + (T0 + 1) * std::log(T0 + 1) / (pi * (T0 - 1) * lT2) +
           A1 * std::log(T0 + 1) / ((T0 - 1) * lT2) + A3 * T0 / (n0 * lT2 * (T0 - 1)) + inner / lT2);
  r.l5 = (2 + d) / 4 * (1 + std::exp(L * (-1 + 2 / (c.zf.R2 * n0 * (1 / M + lT))))) * bracket;
  return r;
}

EllConstants ell_constants(const TuningConfig& c) {
  const EllLow lo = ell_low(c);
  EllConstants r{lo.l0, lo.l1, lo.l2, lo.l3, lo.l4, lo.l5, 0, 0, 0};
  r.l6 = ell6(c.m, c.row.M, c.T0);
  r.l7 = ell7(c.m, c.row.M, c.zf.R2, c.T0, c.omega0, c.x0_log, c.row.n0);
  r.Y0 = y0(c, r);
  return r;
}

Y0Terms y0_terms(const TuningConfig& c, const EllConstants& l) {
  const double L = c.x0_log, M = c.row.M, R2 = c.zf.R2;
  const int n0 = c.row.n0, m = c.m;
  const double S = std::sqrt(m * L / (R2 * n0));
  const double Md = m_bound(c.delta0, m);
  const double ldm = m * std::log(c.delta0);
  Y0Terms t;
  // x0 powers go through exp() so that nothing is formed as a huge intermediate
  t.log_t[0] = std::log((l.l0 + l.l1) * M / n0) - L + 2 * S + ldm;
  t.log_t[1] = std::log(l.l2 * M * M / (double(n0) * n0)) - L / 2 + 2 * S + ldm;
  t.log_t[2] = std::log(l.l3 / L) - L / 2 + 2 * S + ldm;
  t.log_t[3] = std::log(l.l4 * M / n0 / L) + ldm;
  t.log_t[4] = std::log(l.l5 * M / (4.0 * m * R2 * n0 * n0)) + ldm;
  t.log_t[5] = std::log(l.l6 * Md / (4 * std::sqrt(m * R2)) / std::sqrt(L)) - L + 3.5 * S;
  t.log_t[6] = std::log(l.l7 * Md / 2 * M * std::pow(L, -0.25));
  for (int i = 0; i < 7; ++i) t.t[i] = std::exp(t.log_t[i]);
  return t;
}

double y0(const TuningConfig& c, const EllConstants& l) {
  const Y0Terms t = y0_terms(c, l);
  double s = 0;
  for (double v : t.t) s += v;
  return s;
}

}  // namespace cheb
