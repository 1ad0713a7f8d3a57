#include <cmath>
#include <stdexcept>

#include "cheb/assembly.hpp"
#include "cheb/tables.hpp"
#include "doctest.h"

using namespace cheb;

namespace {

// |v - printed| within k units of the last printed digit
bool near(double v, const char* printed, double k = 1) {
  const Printed p = parse_printed(printed);
  return std::abs(v - p.value) <= k * p.unit * (1 + 1e-9);
}

// max over a log-spaced grid of y^pw exp(-k y^{1/3}), same scaling as a0
double a0_grid(const A0Problem& p, double y_hi) {
  const double pw = p.A / 3 + p.B;
  const double k = (p.D - p.b0) * std::pow(p.c0, 1.0 / 6) / std::cbrt(p.M);
  const double lo = p.c0 * std::pow(p.n0, 3) / (p.M * p.M);
  const int N = 1'000'000;
  double best = -1e300;
  for (int i = 0; i < N; ++i) {
    const double y = lo * std::pow(y_hi / lo, double(i) / (N - 1));
    best = std::max(best, pw * std::log(y) - k * std::cbrt(y));
  }
  return p.C * std::pow(p.M, 2 * p.A / 3) / std::pow(p.c0, p.A / 3) * std::exp(best);
}

}  // namespace

TEST_SUITE("assembly") {
  TEST_CASE("first-row anchors") {
    const TuningConfig c = table_config(2, true);
    const FinalConstants f = final_constants(c);
    CHECK(near(f.E12, "0.28649"));
    CHECK(near(f.E3, "0.44511"));
    CHECK(near(f.E3_tilde, "0.27134"));
    CHECK(near(f.D12, "1.5568"));
    CHECK(near(f.D3, "2.4187"));
    CHECK(near(f.D3_tilde, "1.4744"));
    CHECK(near(f.C12, "1.952e-3"));
    CHECK(near(f.C3, "3.674e-2"));
    CHECK(near(f.C3_tilde, "1.813e-3"));
    CHECK(near(f.exp_coeff_full, "0.26730"));
    CHECK(near(f.exp_coeff_half, "0.27656"));
    // N0 sits about 4e-4 relative below the printed values with c = 0.354
    CHECK(f.N0 == doctest::Approx(2.003).epsilon(1e-3));
    CHECK(f.N0 >= 2);
  }

  TEST_CASE("N0 at the last row") {
    CHECK(final_constants(table_config(21, true)).N0 == doctest::Approx(654.650).epsilon(1e-3));
    CHECK(final_constants(table_config(21, false)).N0 == doctest::Approx(519.59).epsilon(1e-3));
  }

  TEST_CASE("N0 scales like c^(-1/3); c = 1/(2 sqrt 2) lands on the printed values") {
    // 39 of 40 cells round to the printed value; n0 = 21 present is 1.5 units low
    const double s = std::cbrt(kCN0 * 2 * std::sqrt(2.0));
    int exact = 0, cells = 0;
    for (const auto& row : baseline_rows(4))
      for (bool present : {true, false}) {
        const int n0 = std::stoi(row[0]);
        const std::string& printed = row[3 + (present ? 0 : 5) + 2];
        const double n = final_constants(table_config(n0, present)).N0 * s;
        ++cells;
        exact += near(n, printed.c_str(), 0.5);
        const std::string what =
            "n0 " + std::to_string(n0) + (present ? " present " : " absent ") + std::to_string(n) + " vs " + printed;
        CHECK_MESSAGE(near(n, printed.c_str(), 2), what);
      }
    CHECK(cells == 40);
    CHECK(exact >= 39);
  }

  TEST_CASE("E3~ equals max(E1,E2) where the table prints them equal") {
    int seen = 0;
    for (const auto& row : baseline_rows(4))
      for (bool present : {true, false}) {
        const size_t o = 3 + (present ? 0 : 5);
        if (row[o + 1] != row[o + 4]) continue;
        ++seen;
        const FinalConstants f = final_constants(table_config(std::stoi(row[0]), present));
        const Printed p = parse_printed(row[o + 1]);
        CHECK(std::abs(f.E12 - f.E3_tilde) <= p.unit);
      }
    CHECK(seen > 0);
  }

  TEST_CASE("D family order range") {
    const TuningConfig c = table_config(2, true);
    CHECK(k_max(c) >= 1);
    CHECK_THROWS_AS(final_constants(c, int(k_max(c)) + 1), std::domain_error);
    CHECK_THROWS_AS(final_constants(c, -1), std::domain_error);
    const FinalConstants f0 = final_constants(c, 0), f1 = final_constants(c, 1);
    CHECK(f1.D12 / f0.D12 == doctest::Approx(c.alpha / (c.row.M * c.row.M)));
  }

  TEST_CASE("exponent coefficients ordered") {
    for (int n0 = 2; n0 <= 21; ++n0) {
      const FinalConstants f = final_constants(table_config(n0, true));
      CHECK(f.exp_coeff_full < f.exp_coeff_half);
      CHECK(f.exp_coeff_half < 1 / std::sqrt(kR2));
    }
  }

  TEST_CASE("delta0 selection") {
    const TuningConfig c = table_config(2, true);
    CHECK(choose_delta0(c, DeltaMode::reproduce(2.26e-3)) == 2.26e-3);
    CHECK_THROWS_AS(choose_delta0(c, DeltaMode::reproduce(1.5)), std::domain_error);
    const double d = choose_delta0(c, DeltaMode::search());
    CHECK(d == doctest::Approx(2.26e-3).epsilon(0.05));
    const double N0 = final_constants(c.with_delta(d)).N0;
    CHECK(N0 >= 2);
    CHECK(N0 < 3);
    CHECK(choose_delta0(table_config(21, true), DeltaMode::search()) == 0.99999);
    CHECK(published_delta0(21, false) == 0.99999);
    CHECK_THROWS_AS(published_delta0(1, true), std::domain_error);
  }

  TEST_CASE("N0 increases with delta0") {
    const TuningConfig c = table_config(5, false);
    double prev = 0;
    for (double d = 1e-4; d < 0.9; d *= 1.7) {
      const double n = final_constants(c.with_delta(d)).N0;
      CHECK(n > prev);
      prev = n;
    }
  }

  TEST_CASE("classical constants anchors") {
    const TuningConfig c = table_config(2, true);
    const ClassicalConstants r = classical_constants(c, Source::REFINED, 0.25);
    CHECK(r.a0 == doctest::Approx(46.1831).epsilon(1e-3));
    CHECK(r.c0 == doctest::Approx(728.705).epsilon(1e-5));
    const ClassicalConstants f = classical_constants(c, Source::FULL, 0.23);
    CHECK(f.a0 == doctest::Approx(174.707).epsilon(1e-3));
    CHECK(std::ceil(f.a0) == 175);
    const ClassicalConstants g = classical_constants(table_config(21, false), Source::FULL, 0.23);
    CHECK(g.a0 == doctest::Approx(1.047e10).epsilon(1e-2));
    CHECK_THROWS_AS(classical_constants(c, Source::FULL, 0.3), std::domain_error);
  }

  TEST_CASE("closed-form a0 against a grid search") {
    for (int n0 : {2, 10, 21})
      for (bool present : {true, false})
        for (Source src : {Source::REFINED, Source::FULL}) {
          const TuningConfig c = table_config(n0, present);
          const FinalConstants f = final_constants(c);
          A0Problem p{};
          p.A = src == Source::REFINED ? 0.75 : 2;
          p.B = src == Source::REFINED ? 0.75 : 1;
          p.C = src == Source::REFINED ? f.C3 : f.C12;
          p.D = src == Source::REFINED ? f.exp_coeff_half : f.exp_coeff_full;
          p.b0 = src == Source::REFINED ? 0.25 : 0.23;
          p.c0 = c.alpha / (n0 * n0);
          p.M = c.row.M;
          p.n0 = n0;
          const ClassicalConstants cc = a0_closed_form(p);
          const double lo = p.c0 * std::pow(n0, 3) / (p.M * p.M);
          const double hi = std::max(cc.y_star, lo) * 1e3;
          CHECK(cc.a0 == doctest::Approx(a0_grid(p, hi)).epsilon(1e-6));
        }
  }

  TEST_CASE("bound evaluation") {
    const auto f = FieldParams::make(2, std::log(3.0));
    const TuningConfig c = table_config(2, false);
    const double thr = c.alpha * std::log(3.0) * std::log(3.0) / 2;
    BoundReport r = bound_eval(f, thr - 1, false, Form::EXP);
    CHECK_FALSE(r.applicable);
    CHECK_FALSE(r.epsilon.has_value());
    CHECK(r.threshold == doctest::Approx(thr));

    r = bound_eval(f, 4000, false, Form::EXP);
    REQUIRE(r.applicable);
    CHECK(r.refined);
    const double want = 0.31501 * std::sqrt(lambda_L(f, 1)) * std::sqrt(4000.0) * std::exp(-std::sqrt(2000.0) / std::sqrt(kR2));
    CHECK(*r.epsilon == doctest::Approx(want).epsilon(1e-4));
    CHECK(r.exceptional.find("none") != std::string::npos);

    const auto g = FieldParams::make(2, std::log(5.0));
    r = bound_eval(g, 100, true, Form::EXP);
    CHECK(r.threshold == doctest::Approx(3776).epsilon(1e-3));
    CHECK_FALSE(r.applicable);

    r = bound_eval(g, 1e7, true, Form::CLASSICAL_ABS);
    REQUIRE(r.applicable);
    CHECK(r.threshold == doctest::Approx(728.705 * 2 * std::log(5.0) * std::log(5.0)).epsilon(1e-5));
    CHECK(*r.epsilon_general == doctest::Approx(174.707 * std::exp(-0.23 * std::sqrt(5e6))).epsilon(1e-3));

    for (Form fm : {Form::LOG, Form::CLASSICAL_NL}) {
      r = bound_eval(g, 1e6, true, fm);
      REQUIRE(r.applicable);
      CHECK(*r.epsilon > 0);
      CHECK(*r.epsilon_general > 0);
    }
    CHECK_THROWS_AS(bound_eval(g, -1, true, Form::EXP), std::domain_error);
  }
}
