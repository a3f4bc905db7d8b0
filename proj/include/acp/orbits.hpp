#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "acp/core.hpp"
#include "acp/rational.hpp"

namespace acp {

using Residues = std::array<std::uint16_t, 4>;

inline constexpr std::uint32_t kMaxModulus = 10000;
inline constexpr std::size_t kDefaultMaxOrbitStates = std::size_t{1} << 24;

// Reduction mod d of the packing's orbit under S1..S4. States are ordered
// residue quadruples sorted lexicographically; edges[s][i] is the index of
// S_{i+1} applied to states[s].
struct OrbitModD {
  std::uint32_t modulus = 0;
  std::vector<Residues> states;
  std::vector<std::array<std::uint32_t, 4>> edges;

  std::size_t size() const { return states.size(); }
  bool contains(const Residues& r) const;
  // Index of r in states, or size() when absent.
  std::size_t index_of(const Residues& r) const;
};

Residues reduce_mod(const Quadruple& q, std::uint32_t d);

OrbitModD orbit_mod(const PackingDescriptor& packing, std::uint32_t d,
                    std::size_t max_states = kDefaultMaxOrbitStates);

// Proportion of state coordinates equal to each residue n in 0..d-1.
std::vector<Rational> residue_proportions(const OrbitModD& orbit);

// gamma(n, P) over the orbit mod 24 and the residues it hits.
struct ResidueProfile {
  std::array<Rational, 24> gamma{};
  std::vector<int> admissible;

  bool is_admissible(std::int64_t n) const {
    const auto r = static_cast<std::size_t>(((n % 24) + 24) % 24);
    return gamma[r] > Rational(0);
  }
};

ResidueProfile gamma_profile(const PackingDescriptor& packing);
std::vector<int> admissible_residues(const PackingDescriptor& packing);

struct ProductReport {
  bool pass = false;
  std::size_t size_product = 0;
  std::size_t size_first = 0;
  std::size_t size_second = 0;
  // States of O_{d1} (resp. O_{d2}) not hit by projecting O_{d1*d2}.
  std::vector<Residues> missed_first;
  std::vector<Residues> missed_second;
  std::string message;
};

// Checks |O_{d1 d2}| = |O_{d1}| |O_{d2}| and that O_{d1 d2} projects onto
// both factors. Requires gcd(d1, d2) = 1 and d1 * d2 <= 10^4.
ProductReport verify_product_structure(const PackingDescriptor& packing, std::uint32_t d1,
                                       std::uint32_t d2);

}  // namespace acp
