#include "cheb/assembly.hpp"

#include <array>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cheb {

using std::numbers::e;

double curly_N0(const TuningConfig& c, double Y0) {
  if (!(Y0 > 0)) throw std::domain_error("curly_N0 needs Y0 > 0");
  const int m = c.m;
  const double M = c.row.M, al = c.alpha;
  const double num = std::pow(c.delta0, (m + 1) / 3.0) * M *
                     std::exp(m / (3 * M) * (2 * std::sqrt(al) / std::sqrt(c.zf.R2) - 1));
  return num / (m * std::cbrt(c.zf.a_beta0 * kCN0 * al * Y0));
}

double k_max(const TuningConfig& c) {
  return 0.5 * (std::sqrt(c.alpha / c.zf.R2) / c.row.M - 1);
}

FinalConstants final_constants(const TuningConfig& c, int k) {
  if (k < 0 || k > k_max(c)) throw std::domain_error("k outside the admissible range for the D family");
  const int m = c.m, n0 = c.row.n0;
  const double M = c.row.M, al = c.alpha, R2 = c.zf.R2, ab = c.zf.a_beta0;
  const double q = double(m) / (m + 1), r = 1.0 / (m + 1);

  FinalConstants f{};
  f.Y0 = ell_constants(c).Y0;
  const double Yr = std::pow(f.Y0, r);
  f.E1 = std::pow(m, r) * std::pow(M, 2 * q) * Yr / (std::pow(ab, q) * std::pow(n0, 3 * q)) +
         std::pow(al * m, q) * f.Y0 /
             (std::pow(c.delta0, m) * std::pow(M, 2 * q) *
              std::exp(2.0 * m * m / (m + 1) * std::sqrt(al / (R2 * M * M))));
  f.E2 = (m + 1) * std::pow(M, 2 * q) * Yr / (std::pow(ab * m, q) * std::pow(n0, 3 * q));
  f.E12 = std::max(f.E1, f.E2);
  f.E3 = std::pow(ab * m, -q) * (m + 1) * Yr;
  const double lam0 = lambda_0(n0, M);
  f.E3_tilde = f.E3 / std::sqrt(n0 * lam0);
  f.N0 = curly_N0(c, f.Y0);

  f.k = k;
  const double dk = std::pow(al / (M * M), k + 0.5) * std::exp(-std::sqrt(al) / (std::sqrt(R2) * M));
  f.D12 = f.E12 * dk;
  f.D3 = f.E3 * dk;
  f.D3_tilde = f.D3 / std::sqrt(lam0 * n0);

  const double es = e * std::sqrt(al * m);
  f.C12 = f.E12 / es;
  f.C3 = f.E3 / std::pow(es, r);
  f.C3_tilde = f.C3 * std::pow(al, -0.25) * std::pow(n0, -1.5) * std::sqrt(M) * std::exp(-1 / (2 * M));
  f.exp_coeff_full = 1 / std::sqrt(R2) - 1 / std::sqrt(al);
  f.exp_coeff_half = 1 / std::sqrt(R2) - 1 / (2 * std::sqrt(al));
  return f;
}

namespace {

// Table-4 delta0 column, rows n0 = 2..21.
constexpr std::array<double, 20> kDeltaPresent = {
    2.26e-3, 1.92e-3, 2.26e-3, 2.02e-3, 2.35e-3, 2.17e-3, 2.48e-3, 2.41e-3, 2.73e-3, 2.61e-3,
    2.93e-3, 2.81e-3, 3.13e-3, 3.02e-3, 3.33e-3, 3.24e-3, 3.55e-3, 3.26e-3, 3.60e-3, 0.99999};
constexpr std::array<double, 20> kDeltaAbsent = {
    3.20e-3, 2.71e-3, 3.19e-3, 2.85e-3, 3.33e-3, 3.06e-3, 3.50e-3, 3.41e-3, 3.87e-3, 3.69e-3,
    4.14e-3, 3.98e-3, 4.42e-3, 4.28e-3, 4.72e-3, 4.58e-3, 5.02e-3, 4.61e-3, 5.10e-3, 0.99999};

constexpr double kDeltaCeil = 0.99999;

}  // namespace

double published_delta0(int n0, bool beta0_present) {
  if (n0 < 2 || n0 > 21) throw std::domain_error("published_delta0: n0 must be in 2..21");
  return beta0_present ? kDeltaPresent[n0 - 2] : kDeltaAbsent[n0 - 2];
}

TuningConfig table_config(int n0, bool beta0_present) {
  return TuningConfig::make(minkowski_table().at(n0 - 2), beta0_present, published_delta0(n0, beta0_present));
}

double choose_delta0(const TuningConfig& cfg, DeltaMode mode) {
  if (mode.kind == DeltaMode::REPRODUCE) return cfg.with_delta(mode.delta0).delta0;

  const double dmax = std::min(kDeltaCeil, 1 - std::sqrt(2.0) * std::exp(-cfg.x0_log));
  const int n0 = cfg.row.n0;
  if (n0 >= 21) return dmax;

  auto N0 = [&](double d) {
    const TuningConfig c = cfg.with_delta(d);
    return curly_N0(c, ell_constants(c).Y0);
  };
  const double dmin = 1e-8;
  if (N0(dmax) < n0) throw std::runtime_error("choose_delta0: N0 never reaches n0");

  // N0 increases with delta0, so the admissible set is an interval
  auto tol = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); };
  const double lo = boost::math::tools::bisect([&](double d) { return N0(d) - n0; }, dmin, dmax, tol).second;
  double hi = dmax;
  if (N0(dmax) >= n0 + 1)
    hi = boost::math::tools::bisect([&](double d) { return N0(d) - (n0 + 1); }, lo, dmax, tol).first;

  auto obj = [&](double d) {
    const FinalConstants f = final_constants(cfg.with_delta(d));
    return std::min(f.E12, f.E3_tilde);
  };
  constexpr int G = 200;
  int best = 0;
  double fbest = obj(lo);
  for (int i = 1; i <= G; ++i) {
    const double v = obj(lo + (hi - lo) * i / G);
    if (v < fbest) {
      fbest = v;
      best = i;
    }
  }
  const double a = lo + (hi - lo) * std::max(best - 1, 0) / G;
  const double b = lo + (hi - lo) * std::min(best + 1, G) / G;
  const auto r = boost::math::tools::brent_find_minima(obj, a, b, 30);
  return r.second < fbest ? r.first : lo + (hi - lo) * best / G;
}

ClassicalConstants a0_closed_form(const A0Problem& p) {
  if (!(p.b0 > 0 && p.b0 < p.D)) throw std::domain_error("classical constants need 0 < b0 < D");
  const double pw = p.A / 3 + p.B;
  const double k = (p.D - p.b0) * std::pow(p.c0, 1.0 / 6) / std::cbrt(p.M);
  const double y_lo = p.c0 * std::pow(p.n0, 3) / (p.M * p.M);
  // y^pw exp(-k y^{1/3}) peaks where y^{1/3} = 3 pw / k and decreases after
  const double y = std::max(std::pow(3 * pw / k, 3), y_lo);
  const double lmax = pw * std::log(y) - k * std::cbrt(y);
  const double a0 = p.C * std::pow(p.M, 2 * p.A / 3) / std::pow(p.c0, p.A / 3) * std::exp(lmax);
  return {a0, p.b0, p.c0, y, p.D};
}

ClassicalConstants classical_constants(const TuningConfig& cfg, Source src, double b0) {
  const FinalConstants f = final_constants(cfg);
  const int n0 = cfg.row.n0;
  A0Problem p{};
  if (src == Source::REFINED) {
    p.A = 0.75;
    p.B = 0.75;
    p.C = f.C3;
    p.D = f.exp_coeff_half;
  } else {
    p.A = 2;
    p.B = 1;
    p.C = f.C12;
    p.D = f.exp_coeff_full;
  }
  p.b0 = b0;
  p.c0 = cfg.alpha / (double(n0) * n0);
  p.M = cfg.row.M;
  p.n0 = n0;
  return a0_closed_form(p);
}

BoundReport bound_eval(const FieldParams& field, double log_x, bool beta0_present, Form form) {
  if (!(log_x > 0)) throw std::domain_error("bound_eval needs log x > 0");
  BoundReport rep;
  const int n0 = std::min(field.n_L, 21);
  // tabulated configuration for this degree; row 21 keeps d0 = 10^21
  const TuningConfig cfg = table_config(n0, beta0_present);
  const FinalConstants f = final_constants(cfg);
  rep.n0 = n0;
  rep.N0 = f.N0;
  rep.refined = field.n_L <= f.N0;
  rep.exceptional = beta0_present ? "x^(beta0-1)/beta0" : "none (no exceptional zero)";

  const double n = field.n_L, ld = field.log_dL;
  if (form == Form::CLASSICAL_ABS) {
    const ClassicalConstants full = classical_constants(cfg, Source::FULL, 0.23);
    rep.threshold = full.c0 * n * ld * ld;
  } else {
    rep.threshold = cfg.alpha * ld * ld / n;
  }
  rep.applicable = log_x >= rep.threshold;
  if (!rep.applicable) return rep;

  const double lam = lambda_L(field, 1);
  const double s = std::sqrt(log_x / n);
  const double decay = std::exp(-s / std::sqrt(cfg.zf.R2));
  double general = 0, refined = 0;
  switch (form) {
    case Form::EXP:
      general = f.E12 * lam * std::sqrt(n) * std::sqrt(log_x) * decay;
      refined = f.E3 * std::sqrt(lam) * std::sqrt(log_x) * decay;
      break;
    case Form::LOG:
      general = f.D12 * lam * std::pow(n, f.k + 1) / std::pow(log_x, f.k);
      refined = f.D3 * std::sqrt(lam) * std::pow(n, f.k + 0.5) / std::pow(log_x, f.k);
      break;
    case Form::CLASSICAL_NL:
      general = f.C12 * n * n * log_x * std::exp(-f.exp_coeff_full * s);
      refined = f.C3 * std::pow(n, 0.75) * std::pow(log_x, 0.75) * std::exp(-f.exp_coeff_half * s);
      break;
    case Form::CLASSICAL_ABS: {
      const ClassicalConstants full = classical_constants(cfg, Source::FULL, 0.23);
      general = full.a0 * std::exp(-full.b0 * s);
      const ClassicalConstants ref = classical_constants(cfg, Source::REFINED, 0.25);
      refined = ref.a0 * std::exp(-ref.b0 * s);
      break;
    }
  }
  rep.epsilon_general = general;
  rep.epsilon = rep.refined ? refined : general;
  return rep;
}

}  // namespace cheb
