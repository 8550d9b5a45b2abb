#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "latwalk/formulas.hpp"
#include "latwalk/oracle.hpp"
#include "latwalk/series.hpp"

using namespace latwalk;

namespace {

PowerSeries poly(unsigned order, std::vector<long> c) {
  std::vector<Rational> q;
  for (const long v : c) q.emplace_back(v);
  return PowerSeries(order, q);
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("square root of 1 - 4x") {
    const PowerSeries s = ps_sqrt(poly(8, {1, -4}));
    const std::vector<Count> want{1, -2, -2, -4, -10, -28, -84, -264, -858};
    CHECK(s.integer_coefficients() == want);
    for (unsigned k = 1; k <= 8; ++k) CHECK(s[k] == -2 * catalan(k - 1));
    CHECK(ps_mul(s, s) == poly(8, {1, -4}));
  }

  TEST_CASE("square root squares back") {
    const PowerSeries s = poly(40, {1, -10, 9});
    const PowerSeries root = ps_sqrt(s);
    CHECK(ps_mul(root, root) == s);
  }

  TEST_CASE("square root of random integer series") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<long> coef(-50, 50);
    std::uniform_int_distribution<unsigned> order(0, 30);
    for (int trial = 0; trial < 40; ++trial) {
      const unsigned n = order(rng);
      std::vector<long> c{1};
      for (unsigned k = 1; k <= n; ++k) c.push_back(coef(rng));
      const PowerSeries s = poly(n, c);
      const PowerSeries root = ps_sqrt(s);
      CHECK(root[0] == 1);
      CHECK(ps_mul(root, root) == s);
    }
  }

  TEST_CASE("division and preconditions") {
    const PowerSeries geo = ps_div(PowerSeries::constant(10, 1), poly(10, {1, -1}));
    for (unsigned k = 0; k <= 10; ++k) CHECK(geo[k] == 1);
    const PowerSeries a = poly(6, {3, 1, 4, 1, 5});
    const PowerSeries b = poly(6, {2, 7, 1, 8});
    CHECK(ps_mul(ps_div(a, b), b) == a);
    CHECK(ps_sub(ps_add(a, b), b) == a);
    CHECK_THROWS_AS(ps_div(a, poly(6, {0, 1})), DomainError);
    CHECK_THROWS(ps_sqrt(poly(6, {4, 1})));
    CHECK_THROWS_AS(ps_divide_by_x(poly(6, {1, 1})), ConsistencyError);
    const PowerSeries shifted = ps_divide_by_x(poly(6, {0, 5, 6}));
    CHECK(shifted.order() == 5);
    CHECK(shifted[0] == 5);
    CHECK(shifted[1] == 6);
    const PowerSeries half = ps_scale(poly(3, {1, 1}), Rational(1, 2));
    CHECK(half[1] == Rational(1, 2));
    CHECK_THROWS_AS(half.integer_coefficients(), ConsistencyError);
  }

  TEST_CASE("generating function examples") {
    CHECK(gf_series({LanguageId::E, 1}, 3).integer_coefficients() == std::vector<Count>{1, 2, 10, 58});
    CHECK(gf_series({LanguageId::A, 1}, 2).integer_coefficients() == std::vector<Count>{1, 8, 96});
    CHECK(gf_series({LanguageId::C, 0}, 3).integer_coefficients() == std::vector<Count>{1, 2, 2, 2});
    CHECK(gf_series({LanguageId::F, 0}, 3).integer_coefficients() == std::vector<Count>{1, 1, 1, 1});
    CHECK(gf_series({LanguageId::B, 0}, 3).integer_coefficients() == std::vector<Count>{1, 0, 0, 0});
    CHECK(gf_series({LanguageId::D, 1}, 3).integer_coefficients() == std::vector<Count>{1, 4, 32, 320});
  }

  TEST_CASE("generating functions match the dp counter") {
    for (unsigned r = 0; r <= 3; ++r) {
      for (const LanguageId id : kAllLanguages) {
        const LanguageSpec spec{id, r};
        CHECK(gf_series(spec, 30).integer_coefficients() == count_dp_table(spec, 30).values);
      }
    }
  }

  TEST_CASE("asymptotic forms") {
    const AsymptoticForm b = asymptotic_form({LanguageId::B, 1});
    CHECK(b.rho == Rational(1, 9));
    CHECK(b.alpha == Rational(1, 2));
    // 9^n/3 * sqrt(8/(pi n)) at n = 7.
    const double direct = std::log(std::pow(9.0, 7) / 3 * std::sqrt(8.0 / (M_PI * 7)));
    CHECK(b.log_estimate(7) == doctest::Approx(direct).epsilon(1e-12));
    const AsymptoticForm a = asymptotic_form({LanguageId::A, 0});
    CHECK(a.rho == Rational(1, 4));
    CHECK(a.alpha == Rational(1, 2));
    const AsymptoticForm f = asymptotic_form({LanguageId::F, 1});
    CHECK(f.rho == Rational(1, 9));
    CHECK(f.alpha == Rational(-1, 2));
    CHECK_THROWS_AS(asymptotic_form({LanguageId::E, 0}), DomainError);
  }

  TEST_CASE("asymptotic forms reproduce the displayed constants") {
    for (unsigned r = 1; r <= 3; ++r) {
      const double m = std::pow(2.0, r + 1) - 1, m1 = std::pow(2.0, r) - 1, t = std::pow(2.0, r);
      const unsigned n = 50;
      const double root = std::sqrt((m * m - 1) / (M_PI * n));
      const double root3 = std::sqrt((m * m - 1) / (M_PI * n * n * n));
      const double lb = (2 * n - 1) * std::log(m) + std::log(root);
      const double le = (2 * n + 1) * std::log(m) - std::log(std::pow(2.0, r + 2) * m1) + std::log(root3);
      CHECK(asymptotic_form({LanguageId::B, r}).log_estimate(n) == doctest::Approx(lb).epsilon(1e-12));
      CHECK(asymptotic_form({LanguageId::C, r}).log_estimate(n) ==
            doctest::Approx(lb + std::log(t / m1)).epsilon(1e-12));
      CHECK(asymptotic_form({LanguageId::E, r}).log_estimate(n) == doctest::Approx(le).epsilon(1e-12));
      CHECK(asymptotic_form({LanguageId::F, r}).log_estimate(n) ==
            doctest::Approx((2 * n + 1) * std::log(m) - std::log(4 * m1 * m1) + std::log(root3))
                .epsilon(1e-12));
      const double la = n * std::log(std::pow(2.0, 2 * r + 2)) - 0.5 * std::log(M_PI * n);
      CHECK(asymptotic_form({LanguageId::A, r}).log_estimate(n) == doctest::Approx(la).epsilon(1e-12));
      CHECK(asymptotic_form({LanguageId::D, r}).log_estimate(n) ==
            doctest::Approx(la - std::log(double(n))).epsilon(1e-12));
    }
  }

  TEST_CASE("asymptotic ratios") {
    CHECK(asymptotic_ratio({LanguageId::B, 1}, 2) == doctest::Approx(28 / (27 * std::sqrt(4 / M_PI))));
    CHECK(std::fabs(asymptotic_ratio({LanguageId::E, 1}, 4000) - 1) <= 0.01);
    for (unsigned r = 1; r <= 2; ++r) {
      for (const LanguageId id : {LanguageId::B, LanguageId::C, LanguageId::E, LanguageId::F}) {
        const LanguageSpec spec{id, r};
        const AsymptoticForm form = asymptotic_form(spec);
        const auto table = recurrence_seq(spec, 2000).values;
        double prev = 1e300;
        for (const unsigned n : {250U, 500U, 1000U, 2000U}) {
          const double dev = std::fabs(asymptotic_ratio(form, table[n], n) - 1);
          CHECK(dev < prev);
          prev = dev;
        }
      }
    }
  }
}
