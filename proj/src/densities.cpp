#include "acp/densities.hpp"

#include <cmath>
#include <vector>

#include "acp/error.hpp"
#include "acp/orbits.hpp"
#include "acp/primes.hpp"

namespace acp {

namespace {

void require_odd_prime(std::int64_t p, const char* what) {
  if (p == 2) {
    throw UsageError(std::string(what) + " at p = 2 depends on the coordinate parity");
  }
  if (p < 3 || !is_prime_mr(static_cast<std::uint64_t>(p))) {
    throw UsageError(std::string(what) + " needs an odd prime, got " + std::to_string(p));
  }
}

void require_small_prime(std::int64_t p) {
  if (p < 2 || !is_prime_mr(static_cast<std::uint64_t>(p))) {
    throw UsageError("expected a prime, got " + std::to_string(p));
  }
  if (p > 50) throw CapacityError("brute-force densities are limited to p <= 50");
}

void require_coord(int coord) {
  if (coord < 0 || coord > 3) throw UsageError("coordinate must be in 0..3");
}

std::int64_t form_mod(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                      std::int64_t p) {
  const std::int64_t s = a + b + c + d;
  return (2 * (a * a + b * b + c * c + d * d) - s * s) % p;
}

}  // namespace

Rational beta_formula(std::int64_t p) {
  require_odd_prime(p, "beta");
  if (p == 3) return {2, 5};
  if (p % 4 == 1) return {1, p + 1};
  return {p + 1, p * p + 1};
}

int beta_two(const PackingDescriptor& packing, int coord) {
  require_coord(coord);
  // The group acts trivially mod 2, so the root's parity is the orbit's.
  return packing.root[coord] % 2 == 0 ? 1 : 0;
}

Rational beta_brute(const PackingDescriptor& packing, std::int64_t p, int coord) {
  require_small_prime(p);
  require_coord(coord);
  const OrbitModD orbit = orbit_mod(packing, static_cast<std::uint32_t>(p));
  std::int64_t zero = 0;
  for (const Residues& r : orbit.states) zero += r[coord] == 0 ? 1 : 0;
  return {zero, static_cast<std::int64_t>(orbit.size())};
}

Rational g_formula(std::int64_t p) {
  require_odd_prime(p, "g");
  if (p == 3) return {1, 10};
  if (p % 4 == 1) return {1, (p + 1) * (p + 1)};
  return {1, p * p + 1};
}

Rational g_brute(const PackingDescriptor& packing, std::int64_t p, int coord_i, int coord_j) {
  require_small_prime(p);
  require_coord(coord_i);
  require_coord(coord_j);
  if (coord_i == coord_j) throw UsageError("g needs two distinct coordinates");
  const OrbitModD orbit = orbit_mod(packing, static_cast<std::uint32_t>(p));
  std::int64_t zero = 0;
  for (const Residues& r : orbit.states) zero += (r[coord_i] == 0 && r[coord_j] == 0) ? 1 : 0;
  return {zero, static_cast<std::int64_t>(orbit.size())};
}

std::int64_t cone_count(std::int64_t p, int arity) {
  if (p <= 3 || !is_prime_mr(static_cast<std::uint64_t>(p))) {
    throw UsageError("cone_count needs a prime p > 3");
  }
  if (arity == 3) return p * p - 1;
  if (arity != 4) throw UsageError("cone arity must be 3 or 4");
  const std::int64_t p2 = p * p;
  const std::int64_t p3 = p2 * p;
  return p % 4 == 1 ? p3 + p2 - p - 1 : p3 - p2 + p - 1;
}

std::int64_t cone_count_brute(std::int64_t p, int arity) {
  if (arity != 3 && arity != 4) throw UsageError("cone arity must be 3 or 4");
  if (p < 2 || p > 50) throw CapacityError("cone_count_brute is limited to p <= 50");
  const std::int64_t last = arity == 4 ? p : 1;
  std::int64_t n = 0;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < last; ++d)
          if ((a | b | c | d) != 0 && form_mod(a, b, c, d, p) == 0) ++n;
  return n;
}

double catalan_L2chi4(double tolerance) {
  if (!(tolerance >= 1e-14)) {
    throw UsageError("tolerance below 1e-14 is beyond double precision");
  }
  // The terms are moments of a positive measure of mass 1 on [0,1], so the
  // m-fold binomial average of the partial sums is within 2^-m of the limit.
  const int m = static_cast<int>(std::ceil(std::log2(1.0 / tolerance))) + 1;
  std::vector<long double> sums(m + 1);
  long double s = 0;
  for (int k = 0; k <= m; ++k) {
    const long double odd = 2.0L * k + 1.0L;
    s += (k % 2 == 0 ? 1.0L : -1.0L) / (odd * odd);
    sums[k] = s;
  }
  for (int level = 0; level < m; ++level) {
    for (int k = 0; k < m - level; ++k) sums[k] = 0.5L * (sums[k] + sums[k + 1]);
  }
  return static_cast<double>(sums[0]);
}

Enclosure kissing_constant_c(std::uint32_t prime_bound) {
  if (prime_bound < 1000) throw UsageError("kissing_constant_c needs prime_bound >= 1000");
  // Fixed-order product; log-sum keeps rounding well below the tail width.
  long double log_product = std::log(2.0L);
  for (std::uint32_t p : primes_up_to(prime_bound)) {
    if (p % 4 != 3) continue;
    const long double q = p;
    log_product += std::log1p(-2.0L / (q * (q - 1) * (q - 1)));
  }
  // Tail: sum_{p > B} -log(1 - 2/(p(p-1)^2)) < sum_{n > B} 3/n^3 < 3/(2 B^2).
  const long double b = prime_bound;
  const long double tail = 3.0L / (2.0L * b * b);
  return Enclosure{static_cast<double>(std::exp(log_product - tail)),
                   static_cast<double>(std::exp(log_product))};
}

double kissing_ratio_alpha(double c, double l2chi4) { return c * l2chi4 * l2chi4 / 3.0; }

}  // namespace acp
