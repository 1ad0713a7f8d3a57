#include "cheb/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cheb {

namespace {

MinkowskiRow row(int n0, double d0, double M) { return {n0, std::log(d0), M}; }

}  // namespace

const std::array<MinkowskiRow, 20>& minkowski_table() {
  // (n0, d0, M) as published; d0 is the smallest |disc| in degree n0.
  static const std::array<MinkowskiRow, 20> t = {
      row(2, 3, 1.82048),          row(3, 23, 0.956787),
      row(4, 117, 0.839953),       row(5, 1609, 0.677198),
      row(6, 9747, 0.653259),      row(7, 184607, 0.577273),
      row(8, 1257728, 0.569605),   row(9, 2.29e7, 0.531078),
      row(10, 1.56e8, 0.530072),   row(11, 3.91e9, 0.498035),
      row(12, 2.74e10, 0.499297),  row(13, 7.56e11, 0.475297),
      row(14, 5.43e12, 0.477442),  row(15, 1.61e14, 0.458541),
      row(16, 1.17e15, 0.461151),  row(17, 3.70e16, 0.445613),
      row(18, 2.73e17, 0.448338),  row(19, 9.03e18, 0.435310),
      row(20, 6.74e19, 0.438047),
      {21, 21 * std::log(10.0), 0.434294},
  };
  return t;
}

MinkowskiRow minkowski_lookup(int n_L) {
  if (n_L < 2)
    throw std::domain_error("degree must be >= 2, got " + std::to_string(n_L));
  if (n_L >= 21) {
    MinkowskiRow r = minkowski_table().back();
    r.log_d0 = n_L * std::log(10.0);
    return r;
  }
  return minkowski_table()[n_L - 2];
}

FieldParams FieldParams::make(int n_L, double log_dL) {
  if (n_L < 2)
    throw std::domain_error("degree must be >= 2, got " + std::to_string(n_L));
  if (!(log_dL >= std::log(3.0) - 1e-12))
    throw std::domain_error("log d_L must be >= log 3");
  const MinkowskiRow r = minkowski_lookup(n_L);
  // the published M and d0 are rounded, so rows sit on the bound only to ~1e-6
  if (n_L > r.M * log_dL * (1 + 1e-5))
    throw std::domain_error("field violates the Minkowski inequality n_L <= M log d_L");
  return {n_L, log_dL, std::exp(log_dL / n_L)};
}

double lambda_L(const FieldParams& f, int m) {
  if (m < 1) throw std::domain_error("lambda_L needs m >= 1");
  const double lD = f.log_dL / f.n_L;
  const double a = lD * lD * f.n_L * f.n_L;
  const double b = lD * std::pow(f.delta_L, m) * std::sqrt(double(f.n_L));
  return std::max(a, b);
}

double lambda_0(int n0, double M) {
  if (n0 < 2 || !(M > 0)) throw std::domain_error("lambda_0 needs n0 >= 2, M > 0");
  return std::max(n0 * n0 / (M * M), std::sqrt(double(n0)) * std::exp(1 / M) / M);
}

}  // namespace cheb
