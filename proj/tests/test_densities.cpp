#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "acp/densities.hpp"
#include "acp/error.hpp"
#include "acp/orbits.hpp"
#include "oracles.hpp"

using acp::Rational;

namespace {

const std::int64_t kSmallPrimes[] = {3, 5, 7, 11, 13};

// G = pi/8 log(2 + sqrt 3) + 3/8 sum 1 / ((2n+1)^2 binom(2n, n)), which
// converges like 4^-n; long double carries it past 1e-18.
long double catalan_oracle() {
  const long double pi = 3.141592653589793238462643383279502884L;
  long double sum = 0, binom = 1;
  for (int n = 0; n < 40; ++n) {
    if (n > 0) binom = binom * (2 * n) * (2 * n - 1) / (static_cast<long double>(n) * n);
    sum += 1.0L / ((2.0L * n + 1) * (2.0L * n + 1) * binom);
  }
  return pi / 8 * std::log(2.0L + std::sqrt(3.0L)) + 3.0L / 8 * sum;
}

long double kissing_product_oracle(std::int64_t limit) {
  long double prod = 2;
  for (std::int64_t p = 3; p <= limit; p += 4)
    if (oracle::is_prime(p)) prod *= 1.0L - 2.0L / (p * static_cast<long double>(p - 1) * (p - 1));
  return prod;
}

}  // namespace

TEST_CASE("beta closed form") {
  CHECK(acp::beta_formula(5) == Rational(1, 6));
  CHECK(acp::beta_formula(7) == Rational(4, 25));
  CHECK(acp::beta_formula(3) == Rational(2, 5));
  CHECK(acp::beta_formula(13) == Rational(1, 14));
  CHECK(acp::beta_formula(11) == Rational(12, 122));
  CHECK_THROWS_AS(acp::beta_formula(2), acp::UsageError);
  CHECK_THROWS_AS(acp::beta_formula(9), acp::UsageError);
}

TEST_CASE("g closed form") {
  CHECK(acp::g_formula(5) == Rational(1, 36));
  CHECK(acp::g_formula(7) == Rational(1, 50));
  CHECK(acp::g_formula(3) == Rational(1, 10));
  CHECK_THROWS_AS(acp::g_formula(2), acp::UsageError);
}

TEST_CASE("beta at two") {
  const auto b = acp::bugeye();
  CHECK(acp::beta_two(b, 0) == 0);
  CHECK(acp::beta_two(b, 1) == 1);
  CHECK(acp::beta_two(b, 2) == 1);
  CHECK(acp::beta_two(b, 3) == 0);
  const auto c = acp::coins();
  CHECK(acp::beta_two(c, 2) == 1);
  CHECK(acp::beta_two(c, 3) == 1);
  for (const auto& p : {b, c}) {
    int even = 0;
    for (int j = 0; j < 4; ++j) even += acp::beta_two(p, j);
    CHECK(even == 2);
    // The orbit mod 2 is a single point, so the parity pattern is fixed.
    CHECK(acp::orbit_mod(p, 2).size() == 1);
  }
}

TEST_CASE("brute force densities match the closed forms") {
  for (const auto& pk : {acp::bugeye(), acp::coins()}) {
    for (std::int64_t p : kSmallPrimes) {
      for (int j = 0; j < 4; ++j) {
        CHECK(acp::beta_brute(pk, p, j) == acp::beta_formula(p));
        for (int i = 0; i < 4; ++i)
          if (i != j) CHECK(acp::g_brute(pk, p, i, j) == acp::g_formula(p));
      }
    }
  }
  CHECK(acp::beta_brute(acp::bugeye(), 5, 0) == Rational(24, 144));
  CHECK(acp::beta_brute(acp::coins(), 7, 2) == Rational(48, 300));
  CHECK(acp::g_brute(acp::coins(), 7, 0, 3) == Rational(6, 300));
  CHECK_THROWS_AS(acp::g_brute(acp::bugeye(), 5, 1, 1), acp::UsageError);
  CHECK_THROWS_AS(acp::beta_brute(acp::bugeye(), 53, 0), acp::CapacityError);
  CHECK_THROWS_AS(acp::beta_brute(acp::bugeye(), 15, 0), acp::UsageError);
}

TEST_CASE("cone counts") {
  CHECK(acp::cone_count(5, 4) == 144);
  CHECK(acp::cone_count(7, 4) == 300);
  CHECK(acp::cone_count(7, 3) == 48);
  for (std::int64_t p : {5, 7, 11, 13}) {
    CHECK(acp::cone_count(p, 4) == acp::cone_count_brute(p, 4));
    CHECK(acp::cone_count(p, 3) == acp::cone_count_brute(p, 3));
  }
  CHECK_THROWS_AS(acp::cone_count(3, 4), acp::UsageError);
  CHECK_THROWS_AS(acp::cone_count(5, 2), acp::UsageError);
}

TEST_CASE("beta is multiplicative on square-free moduli") {
  const std::pair<std::int64_t, std::int64_t> moduli[] = {{5, 7}, {5, 11}, {7, 11}};
  for (const auto& [p, q] : moduli) {
    const auto o = acp::orbit_mod(acp::bugeye(), static_cast<std::uint32_t>(p * q));
    CHECK(o.size() == static_cast<std::size_t>(acp::cone_count(p, 4) * acp::cone_count(q, 4)));
    for (int j = 0; j < 4; ++j) {
      std::int64_t zeros = 0;
      for (const auto& s : o.states) zeros += s[j] == 0;
      CHECK(Rational(zeros, static_cast<std::int64_t>(o.size())) ==
            acp::beta_formula(p) * acp::beta_formula(q));
    }
  }
}

TEST_CASE("L(2, chi_4)") {
  const double g = static_cast<double>(catalan_oracle());
  CHECK(std::abs(g - 0.915965594177219015) < 1e-16);
  CHECK(std::abs(acp::catalan_L2chi4(1e-12) - g) <= 1e-12);
  CHECK(std::abs(acp::catalan_L2chi4(1e-6) - 0.915966) <= 1e-6);
  CHECK(std::abs(acp::catalan_L2chi4(1e-6) - g) <= 1e-6);
  CHECK(std::abs(acp::catalan_L2chi4() - g) <= 2e-14);
  // Alternating partial sums bracket the limit.
  CHECK(1.0 - 1.0 / 9 < g);
  CHECK(1.0 - 1.0 / 9 + 1.0 / 25 > g);
  CHECK_THROWS_AS(acp::catalan_L2chi4(1e-15), acp::UsageError);
  CHECK_THROWS_AS(acp::catalan_L2chi4(0.0), acp::UsageError);
}

TEST_CASE("kissing constant enclosure") {
  const auto e6 = acp::kissing_constant_c(1000000);
  const auto e3 = acp::kissing_constant_c(1000);
  CHECK(e6.lower <= e6.upper);
  CHECK(e6.half_width() < 1e-11);
  CHECK(e3.half_width() < 3.0 / (2e6));
  CHECK(std::abs(e6.value() - e3.value()) < 1e-5);
  // Enclosures nest around the limit.
  CHECK(e3.lower <= e6.lower + 1e-15);
  CHECK(e6.upper <= e3.upper + 1e-15);
  // Independent product by trial division; the tail past 1e5 is ~1e-11.
  const double oracle = static_cast<double>(kissing_product_oracle(100000));
  CHECK(std::abs(e6.value() - oracle) < 1e-9);
  CHECK(std::abs(e6.value() - 1.6493376891) < 1e-9);
  CHECK(e6.upper < 5.0 / 3);
  CHECK_THROWS_AS(acp::kissing_constant_c(999), acp::UsageError);
}

TEST_CASE("alpha") {
  const double l = acp::catalan_L2chi4(1e-12);
  const double c = acp::kissing_constant_c(1000000).value();
  CHECK(acp::kissing_ratio_alpha(c, l) == doctest::Approx(c * l * l / 3));
  CHECK(acp::kissing_ratio_alpha(1.646, l) == doctest::Approx(0.4605).epsilon(0.001));
}
