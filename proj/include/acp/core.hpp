#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace acp {

using Curvature = std::int64_t;

// Four curvatures of mutually tangent circles, in coordinate order. The order
// is meaningful: coordinate i is the slot rewritten by generator S_{i+1}.
struct Quadruple {
  std::array<Curvature, 4> v{};

  constexpr Curvature& operator[](std::size_t i) { return v[i]; }
  constexpr Curvature operator[](std::size_t i) const { return v[i]; }

  constexpr Curvature sum() const { return v[0] + v[1] + v[2] + v[3]; }

  friend constexpr auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

std::string to_string(const Quadruple& q);

// F(v) = 2 * sum(v_i^2) - (sum v_i)^2. Entries must fit in 62 bits;
// anything larger, or a result outside int64, raises ArithmeticOverflow.
std::int64_t descartes_form(const Quadruple& q);

bool is_primitive(const Quadruple& q);

// Two entries even and two odd.
bool has_parity_signature(const Quadruple& q);

// Applies S_{coord+1}: entry `coord` becomes 2*(sum of the other three) minus
// itself. coord must be in 0..3 (UsageError otherwise).
Quadruple apply_generator(const Quadruple& q, int coord);

// Walks down the Apollonian tree by rewriting the maximal entry while that
// strictly decreases it, then sorts (negative entry first, rest ascending).
// Throws UnsupportedPacking when the walk lands on an unbounded packing.
Quadruple reduce_to_root(Quadruple q);

// A bounded, primitive packing identified by its sorted root quadruple.
struct PackingDescriptor {
  Quadruple root;
  std::string name;

  Curvature bounding_curvature() const { return root[0]; }
  Curvature max_root_entry() const { return root[3]; }
};

// Checks Descartes, primitivity, parity, boundedness and the root condition.
PackingDescriptor validate_packing(const Quadruple& root, std::string name = {});

// "-1,2,2,3" (whitespace around entries is allowed).
Quadruple parse_quadruple(std::string_view text);

PackingDescriptor bugeye();
PackingDescriptor coins();

// Accepts a preset name ("bugeye", "coins") or any quadruple of a bounded
// packing, which is reduced to its root first.
PackingDescriptor packing_from_spec(std::string_view spec);

}  // namespace acp
