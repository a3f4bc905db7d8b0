#include "acp/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "acp/error.hpp"

namespace acp {

namespace {

std::uint64_t pack(const Residues& r) {
  return (std::uint64_t{r[0]} << 48) | (std::uint64_t{r[1]} << 32) |
         (std::uint64_t{r[2]} << 16) | std::uint64_t{r[3]};
}

Residues step(const Residues& r, int coord, std::uint32_t d) {
  std::uint64_t others = 0;
  for (int j = 0; j < 4; ++j) {
    if (j != coord) others += r[j];
  }
  Residues out = r;
  out[coord] = static_cast<std::uint16_t>((2 * others + (d - r[coord])) % d);
  return out;
}

}  // namespace

bool OrbitModD::contains(const Residues& r) const { return index_of(r) != states.size(); }

std::size_t OrbitModD::index_of(const Residues& r) const {
  auto it = std::lower_bound(states.begin(), states.end(), r);
  return (it != states.end() && *it == r) ? static_cast<std::size_t>(it - states.begin())
                                          : states.size();
}

Residues reduce_mod(const Quadruple& q, std::uint32_t d) {
  Residues r{};
  for (int i = 0; i < 4; ++i) {
    const Curvature m = q[i] % static_cast<Curvature>(d);
    r[i] = static_cast<std::uint16_t>(m < 0 ? m + d : m);
  }
  return r;
}

OrbitModD orbit_mod(const PackingDescriptor& packing, std::uint32_t d, std::size_t max_states) {
  if (d < 2 || d > kMaxModulus) {
    throw CapacityError("modulus must be in 2.." + std::to_string(kMaxModulus) + ", got " +
                        std::to_string(d));
  }
  std::vector<Residues> found{reduce_mod(packing.root, d)};
  std::unordered_map<std::uint64_t, std::uint32_t> seen{{pack(found[0]), 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (int i = 0; i < 4; ++i) {
      const Residues next = step(found[head], i, d);
      if (seen.emplace(pack(next), static_cast<std::uint32_t>(found.size())).second) {
        if (found.size() >= max_states) {
          throw CapacityError("orbit mod " + std::to_string(d) + " exceeds " +
                              std::to_string(max_states) + " states");
        }
        found.push_back(next);
      }
    }
  }

  OrbitModD orbit;
  orbit.modulus = d;
  orbit.states = found;
  std::sort(orbit.states.begin(), orbit.states.end());
  orbit.edges.resize(orbit.states.size());
  for (std::size_t s = 0; s < orbit.states.size(); ++s) {
    for (int i = 0; i < 4; ++i) {
      orbit.edges[s][i] = static_cast<std::uint32_t>(orbit.index_of(step(orbit.states[s], i, d)));
    }
  }
  return orbit;
}

std::vector<Rational> residue_proportions(const OrbitModD& orbit) {
  std::vector<std::int64_t> hits(orbit.modulus, 0);
  for (const Residues& r : orbit.states) {
    for (std::uint16_t c : r) ++hits[c];
  }
  const auto denom = static_cast<std::int64_t>(4 * orbit.size());
  std::vector<Rational> out;
  out.reserve(hits.size());
  for (std::int64_t h : hits) out.emplace_back(h, denom);
  return out;
}

ResidueProfile gamma_profile(const PackingDescriptor& packing) {
  const auto props = residue_proportions(orbit_mod(packing, 24));
  ResidueProfile profile;
  for (int n = 0; n < 24; ++n) {
    profile.gamma[n] = props[n];
    if (props[n] > Rational(0)) profile.admissible.push_back(n);
  }
  return profile;
}

std::vector<int> admissible_residues(const PackingDescriptor& packing) {
  return gamma_profile(packing).admissible;
}

ProductReport verify_product_structure(const PackingDescriptor& packing, std::uint32_t d1,
                                       std::uint32_t d2) {
  if (d1 == 0 || d2 == 0 || std::gcd(d1, d2) != 1) {
    throw UsageError("product check needs coprime positive moduli");
  }
  if (std::uint64_t{d1} * d2 > kMaxModulus) {
    throw CapacityError("product modulus exceeds " + std::to_string(kMaxModulus));
  }
  ProductReport report;
  // O_1 is the single zero state; a factor of 1 is trivially compatible.
  if (d1 == 1 || d2 == 1) {
    report.pass = true;
    report.message = "trivial factor";
    return report;
  }
  const OrbitModD full = orbit_mod(packing, d1 * d2);
  const OrbitModD first = orbit_mod(packing, d1);
  const OrbitModD second = orbit_mod(packing, d2);
  report.size_product = full.size();
  report.size_first = first.size();
  report.size_second = second.size();

  std::vector<bool> hit_first(first.size(), false);
  std::vector<bool> hit_second(second.size(), false);
  bool projections_inside = true;
  for (const Residues& r : full.states) {
    Residues a{}, b{};
    for (int i = 0; i < 4; ++i) {
      a[i] = static_cast<std::uint16_t>(r[i] % d1);
      b[i] = static_cast<std::uint16_t>(r[i] % d2);
    }
    const std::size_t ia = first.index_of(a);
    const std::size_t ib = second.index_of(b);
    if (ia == first.size() || ib == second.size()) {
      projections_inside = false;
      continue;
    }
    hit_first[ia] = true;
    hit_second[ib] = true;
  }
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (!hit_first[i]) report.missed_first.push_back(first.states[i]);
  }
  for (std::size_t i = 0; i < second.size(); ++i) {
    if (!hit_second[i]) report.missed_second.push_back(second.states[i]);
  }
  const bool sizes = full.size() == first.size() * second.size();
  report.pass = sizes && projections_inside && report.missed_first.empty() &&
                report.missed_second.empty();
  report.message = std::to_string(full.size()) + (sizes ? " = " : " != ") +
                   std::to_string(first.size()) + " * " + std::to_string(second.size());
  return report;
}

}  // namespace acp
