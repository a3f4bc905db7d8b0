#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "acp/core.hpp"
#include "acp/error.hpp"

using acp::Quadruple;

namespace {

const Quadruple kBugeye{{-1, 2, 2, 3}};
const Quadruple kCoins{{-11, 21, 24, 28}};

// A handful of quadruples reached by random generator words from both roots.
std::vector<Quadruple> random_orbit_points(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Quadruple> out;
  for (int k = 0; k < count; ++k) {
    Quadruple q = (k % 2) ? kCoins : kBugeye;
    const int len = 1 + static_cast<int>(rng() % 12);
    int last = -1;
    for (int s = 0; s < len; ++s) {
      int g = static_cast<int>(rng() % 4);
      if (g == last) g = (g + 1) % 4;
      q = acp::apply_generator(q, g);
      last = g;
    }
    out.push_back(q);
  }
  return out;
}

}  // namespace

TEST_CASE("descartes form") {
  CHECK(acp::descartes_form(kBugeye) == 0);
  CHECK(acp::descartes_form(kCoins) == 0);
  CHECK(acp::descartes_form(Quadruple{{1, 1, 1, 1}}) == -8);
  CHECK(acp::descartes_form(Quadruple{{0, 0, 1, 1}}) == 0);
}

TEST_CASE("descartes form rejects entries past 62 bits") {
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(acp::descartes_form(Quadruple{{big, 1, 1, 1}}), acp::ArithmeticOverflow);
  CHECK_THROWS_AS(acp::descartes_form(Quadruple{{1, -big, 1, 1}}), acp::ArithmeticOverflow);
}

TEST_CASE("generators") {
  CHECK(acp::apply_generator(kCoins, 3) == Quadruple{{-11, 21, 24, 40}});
  CHECK(acp::apply_generator(kBugeye, 0) == Quadruple{{15, 2, 2, 3}});
  // S4 fixes the Bugeye root quadruple: the mirror circle of curvature 3.
  CHECK(acp::apply_generator(kBugeye, 3) == kBugeye);
  CHECK_THROWS_AS(acp::apply_generator(kBugeye, 4), acp::UsageError);
  CHECK_THROWS_AS(acp::apply_generator(kBugeye, -1), acp::UsageError);
}

TEST_CASE("generator properties along random words") {
  for (const Quadruple& q : random_orbit_points(400, 7)) {
    CHECK(acp::descartes_form(q) == 0);
    CHECK(acp::is_primitive(q));
    CHECK(acp::has_parity_signature(q));
    for (int i = 0; i < 4; ++i) {
      const Quadruple s = acp::apply_generator(q, i);
      CHECK(acp::descartes_form(s) == 0);
      CHECK(acp::is_primitive(s));
      CHECK(acp::has_parity_signature(s));
      CHECK(acp::apply_generator(s, i) == q);
      for (int k = 0; k < 4; ++k)
        if (k != i) CHECK(s[k] == q[k]);
    }
  }
}

TEST_CASE("reduce to root") {
  CHECK(acp::reduce_to_root(Quadruple{{15, 2, 2, 3}}) == kBugeye);
  CHECK(acp::reduce_to_root(kBugeye) == kBugeye);
  CHECK(acp::reduce_to_root(Quadruple{{-11, 21, 24, 40}}) == kCoins);
  // Coordinate order of the input does not matter.
  CHECK(acp::reduce_to_root(Quadruple{{3, 2, -1, 2}}) == kBugeye);
  CHECK_THROWS_AS(acp::reduce_to_root(Quadruple{{0, 0, 1, 1}}), acp::UnsupportedPacking);
  // Strip packing: S1 takes (0,0,1,1) to (4,0,1,1), which reduces back to a zero entry.
  CHECK_THROWS_AS(acp::reduce_to_root(Quadruple{{4, 0, 1, 1}}), acp::UnsupportedPacking);
  CHECK_THROWS_AS(acp::reduce_to_root(Quadruple{{1, 1, 1, 1}}), acp::InvalidQuadruple);
}

TEST_CASE("reduce to root is idempotent and lands on a valid root") {
  auto points = random_orbit_points(300, 11);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Quadruple r = acp::reduce_to_root(points[k]);
    CHECK(r == ((k % 2) ? kCoins : kBugeye));
    CHECK(acp::reduce_to_root(r) == r);
    CHECK(r[0] < 0);
    CHECK(r[1] > 0);
    CHECK(r[1] <= r[2]);
    CHECK(r[2] <= r[3]);
    CHECK(r[0] + r[1] + r[2] >= r[3]);
  }
}

TEST_CASE("validate packing") {
  const auto p = acp::validate_packing(kBugeye, "Bugeye");
  CHECK(p.root == kBugeye);
  CHECK(p.bounding_curvature() == -1);
  CHECK(p.max_root_entry() == 3);

  CHECK_THROWS_AS(acp::validate_packing(Quadruple{{0, 0, 1, 1}}), acp::UnsupportedPacking);
  try {
    acp::validate_packing(Quadruple{{-2, 4, 4, 6}});
    FAIL("imprimitive root accepted");
  } catch (const acp::InvalidQuadruple& e) {
    CHECK(e.reason() == acp::InvalidQuadruple::Reason::imprimitive);
  }
  try {
    acp::validate_packing(Quadruple{{1, 1, 1, 1}});
    FAIL("non-Descartes root accepted");
  } catch (const acp::InvalidQuadruple& e) {
    CHECK(e.reason() == acp::InvalidQuadruple::Reason::not_descartes);
  }
  try {
    acp::validate_packing(Quadruple{{-11, 21, 24, 40}});
    FAIL("non-root accepted");
  } catch (const acp::InvalidQuadruple& e) {
    CHECK(e.reason() == acp::InvalidQuadruple::Reason::not_root);
  }
  // Unsorted root.
  CHECK_THROWS_AS(acp::validate_packing(Quadruple{{-1, 3, 2, 2}}), acp::InvalidQuadruple);
}

TEST_CASE("parsing and presets") {
  CHECK(acp::parse_quadruple("-1,2,2,3") == kBugeye);
  CHECK(acp::parse_quadruple(" -11, 21 ,24,28 ") == kCoins);
  CHECK_THROWS_AS(acp::parse_quadruple("1,2,3"), acp::UsageError);
  CHECK_THROWS_AS(acp::parse_quadruple("1,2,x,3"), acp::UsageError);
  CHECK_THROWS_AS(acp::parse_quadruple("1,2,3,4,5"), acp::UsageError);

  CHECK(acp::bugeye().root == kBugeye);
  CHECK(acp::coins().root == kCoins);
  CHECK(acp::packing_from_spec("bugeye").root == acp::packing_from_spec("-1,2,2,3").root);
  CHECK(acp::packing_from_spec("coins").root == acp::packing_from_spec("-11,21,24,28").root);
  // Any quadruple of the packing reduces to the same root.
  CHECK(acp::packing_from_spec("-11,21,24,40").root == kCoins);
  CHECK(acp::to_string(kBugeye) == "(-1,2,2,3)");
  CHECK_THROWS_AS(acp::packing_from_spec("-2,4,4,6"), acp::InvalidQuadruple);
}
