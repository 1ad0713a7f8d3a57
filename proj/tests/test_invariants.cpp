#include <cmath>
#include <stdexcept>

#include "cheb/invariants.hpp"
#include "doctest.h"

using namespace cheb;

TEST_SUITE("invariants") {
  TEST_CASE("minkowski lookup rows") {
    auto r = minkowski_lookup(2);
    CHECK(r.n0 == 2);
    CHECK(std::exp(r.log_d0) == doctest::Approx(3));
    CHECK(r.M == 1.82048);

    r = minkowski_lookup(12);
    CHECK(r.n0 == 12);
    CHECK(std::exp(r.log_d0) == doctest::Approx(2.74e10));
    CHECK(r.M == 0.499297);

    r = minkowski_lookup(25);
    CHECK(r.n0 == 21);
    CHECK(r.log_d0 == doctest::Approx(25 * std::log(10.0)));
    CHECK(r.M == 0.434294);

    CHECK_THROWS_AS(minkowski_lookup(1), std::domain_error);
  }

  TEST_CASE("table has 20 rows n0 = 2..21") {
    const auto& t = minkowski_table();
    REQUIRE(t.size() == 20);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i].n0 == int(i) + 2);
    CHECK(t.back().log_d0 == doctest::Approx(21 * std::log(10.0)));
  }

  TEST_CASE("every row satisfies n0 <= M log d0 up to the printed rounding") {
    for (const auto& r : minkowski_table()) {
      CHECK(r.n0 <= r.M * r.log_d0 * (1 + 1e-5));
      CHECK_NOTHROW(FieldParams::make(r.n0, r.log_d0));
    }
  }

  TEST_CASE("field validation") {
    CHECK_THROWS_AS(FieldParams::make(1, 5), std::domain_error);
    CHECK_THROWS_AS(FieldParams::make(2, 0.5), std::domain_error);
    // degree 10 with a tiny discriminant breaks the Minkowski bound
    CHECK_THROWS_AS(FieldParams::make(10, 5), std::domain_error);
    const auto f = FieldParams::make(2, std::log(3.0));
    CHECK(f.delta_L == doctest::Approx(std::sqrt(3.0)));
  }

  TEST_CASE("lambda examples") {
    const auto f = FieldParams::make(2, std::log(3.0));
    const double lD = std::log(std::sqrt(3.0));
    const double b1 = lD * lD * 4, b2 = lD * std::sqrt(3.0) * std::sqrt(2.0);
    CHECK(b1 == doctest::Approx(1.2069).epsilon(1e-4));
    CHECK(lambda_L(f, 1) == doctest::Approx(1.3454).epsilon(1e-4));
    CHECK(lambda_L(f, 1) == doctest::Approx(std::max(b1, b2)));
    CHECK_THROWS_AS(lambda_L(f, 0), std::domain_error);

    // log Delta_L = 1: branches n^2 = 4 and e sqrt 2
    const auto g = FieldParams::make(2, 2.0);
    CHECK(lambda_L(g, 1) == doctest::Approx(4));

    // branch values evaluated by hand: sqrt2 e^{1/M}/M = 1.34552, 21^2/M^2 = 2338.14
    CHECK(lambda_0(2, 1.82048) == doctest::Approx(std::sqrt(2.0) * std::exp(1 / 1.82048) / 1.82048));
    CHECK(lambda_0(2, 1.82048) == doctest::Approx(1.3455).epsilon(1e-4));
    CHECK(lambda_0(21, 0.434294) == doctest::Approx(21 * 21 / (0.434294 * 0.434294)));
    CHECK(lambda_0(21, 0.434294) == doctest::Approx(2338.1).epsilon(1e-4));
    // M = n0 collapses the first branch to 1
    CHECK(lambda_0(3, 3) == doctest::Approx(std::max(1.0, std::sqrt(3.0) * std::exp(1.0 / 3) / 3)));
  }

  TEST_CASE("lambda_L monotone in each argument") {
    for (int n = 2; n <= 20; ++n) {
      const double ld0 = n / minkowski_lookup(n).M + 0.01;
      double prev = 0;
      for (double ld = ld0; ld < ld0 + 50; ld += 0.5) {
        const double v = lambda_L(FieldParams::make(n, ld), 1);
        CHECK(v >= prev);
        prev = v;
      }
      const auto f = FieldParams::make(n, ld0 + 3);
      CHECK(lambda_L(f, 2) >= lambda_L(f, 1));
    }
    // degree at fixed root discriminant (at fixed log d_L it falls instead)
    double prev = 0;
    for (int n = 2; n <= 30; ++n) {
      const double v = lambda_L(FieldParams::make(n, n * 3.0), 1);
      CHECK(v >= prev);
      prev = v;
    }
  }

  TEST_CASE("lambda_L >= lambda_0 on the Minkowski boundary and beyond") {
    for (const auto& r : minkowski_table()) {
      for (double extra : {0.0, 1.0, 10.0, 100.0}) {
        const double ld = std::max(r.log_d0, r.n0 / r.M) + extra;
        const auto f = FieldParams::make(r.n0, ld);
        CHECK(lambda_L(f, 1) >= lambda_0(r.n0, r.M) * (1 - 1e-12));
      }
    }
  }
}
