#pragma once

#include <cstdint>

#include "acp/core.hpp"
#include "acp/rational.hpp"

namespace acp {

inline constexpr double kDelta = 1.30568;  // growth exponent of N_P(x)

// Density of orbit states whose coordinate vanishes mod an odd prime p.
Rational beta_formula(std::int64_t p);

// 1 if coordinate `coord` of the packing is even along the whole orbit.
int beta_two(const PackingDescriptor& packing, int coord);

// Literal count over orbit_mod(p): #{v : v_coord = 0} / |O_p|. p <= 50.
Rational beta_brute(const PackingDescriptor& packing, std::int64_t p, int coord);

// Density of orbit states with two fixed coordinates both zero mod p.
Rational g_formula(std::int64_t p);
Rational g_brute(const PackingDescriptor& packing, std::int64_t p, int coord_i, int coord_j);

// Nonzero solutions of F = 0 over F_p^4 (arity 4) or of F(v1,v2,v3,0) = 0
// over F_p^3 (arity 3), by closed form. p > 3.
std::int64_t cone_count(std::int64_t p, int arity);
// The same count by enumerating every vector.
std::int64_t cone_count_brute(std::int64_t p, int arity);

// L(2, chi_4) = sum_k (-1)^k / (2k+1)^2 to within `tolerance` (>= 1e-14).
double catalan_L2chi4(double tolerance = 1e-14);

struct Enclosure {
  double lower = 0;
  double upper = 0;

  double value() const { return 0.5 * (lower + upper); }
  double half_width() const { return 0.5 * (upper - lower); }
};

// 2 * prod_{p = 3 mod 4} (1 - 2/(p (p-1)^2)), enclosed using the partial
// product up to prime_bound (>= 1000) and a bound on the tail.
Enclosure kissing_constant_c(std::uint32_t prime_bound);

// c * L(2,chi_4)^2 / 3, the predicted limit of psi2 / (3 N).
double kissing_ratio_alpha(double c, double l2chi4);

}  // namespace acp
