#pragma once

#include <optional>
#include <string>

#include "cheb/constants.hpp"
#include "cheb/invariants.hpp"

namespace cheb {

inline constexpr double kCN0 = 0.354;  // the small constant inside N0

struct FinalConstants {
  double Y0;
  double E1, E2, E12, E3, E3_tilde;
  double N0;
  int k;  // order used for the D family
  double D12, D3, D3_tilde;
  double C12, C3, C3_tilde;
  double exp_coeff_full;  // 1/sqrt(R2) - 1/sqrt(alpha)
  double exp_coeff_half;  // 1/sqrt(R2) - 1/(2 sqrt(alpha))
};

double curly_N0(const TuningConfig& cfg, double Y0);

// Largest admissible k for the D family.
double k_max(const TuningConfig& cfg);

FinalConstants final_constants(const TuningConfig& cfg, int k = 1);

struct DeltaMode {
  enum Kind { REPRODUCE, SEARCH } kind;
  double delta0 = 0;  // used by REPRODUCE
  static DeltaMode reproduce(double d) { return {REPRODUCE, d}; }
  static DeltaMode search() { return {SEARCH, 0}; }
};

// cfg.delta0 is ignored by SEARCH.
double choose_delta0(const TuningConfig& cfg, DeltaMode mode);

// Published delta0 column for (n0, beta0), used as the REPRODUCE default.
double published_delta0(int n0, bool beta0_present);

// Configuration used for the tables: m = 1, t0 = T0 = 40, omega0 = 1.
TuningConfig table_config(int n0, bool beta0_present);

enum class Source { REFINED, FULL };

struct ClassicalConstants {
  double a0, b0, c0;
  double y_star;  // maximizing log x
  double D;       // exponent coefficient of the source bound
};

// max over y >= y_lo of y^p exp(-k y^{1/3}), in log form, with its argmax.
struct A0Problem {
  double C, A, B, D, b0, c0, M;
  int n0;
};
ClassicalConstants a0_closed_form(const A0Problem& p);

ClassicalConstants classical_constants(const TuningConfig& cfg, Source src, double b0);

enum class Form { EXP, LOG, CLASSICAL_NL, CLASSICAL_ABS };

struct BoundReport {
  double threshold = 0;
  bool applicable = false;
  bool refined = false;  // n_L <= N0, so the refined branch was selected
  std::optional<double> epsilon;          // selected branch
  std::optional<double> epsilon_general;  // branch valid for every n_L >= n0
  int n0 = 0;
  double N0 = 0;
  std::string exceptional;  // symbolic beta0 term
};

BoundReport bound_eval(const FieldParams& field, double log_x, bool beta0_present, Form form);

}  // namespace cheb
