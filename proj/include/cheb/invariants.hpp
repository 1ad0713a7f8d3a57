#pragma once

#include <array>

namespace cheb {

// Degree, log of the absolute discriminant, and root discriminant of L.
// Discriminants are kept in log form; d_L itself overflows quickly.
struct FieldParams {
  int n_L;
  double log_dL;
  double delta_L;  // exp(log_dL / n_L)

  // Validates degree, log_dL >= log 3, and the Minkowski inequality.
  static FieldParams make(int n_L, double log_dL);
};

struct MinkowskiRow {
  int n0;
  double log_d0;
  double M;
};

// The 20 rows (n0 = 2..21) of the minimal-discriminant table, verbatim.
// Row 21 stands for every n_L >= 21 with d0 = 10^{n_L}.
const std::array<MinkowskiRow, 20>& minkowski_table();

// Row with the largest n0 <= min(n_L, 21). For n_L >= 21, log_d0 = n_L log 10.
MinkowskiRow minkowski_lookup(int n_L);

double lambda_L(const FieldParams& f, int m);
double lambda_0(int n0, double M);

}  // namespace cheb
