#include "acp/core.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "acp/error.hpp"

namespace acp {

namespace {

constexpr Curvature kMaxEntry = Curvature{1} << 62;

bool fits_62_bits(Curvature x) { return x < kMaxEntry && x > -kMaxEntry; }

Curvature checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw ArithmeticOverflow("curvature arithmetic exceeds 64 bits");
  }
  return static_cast<Curvature>(v);
}

int count_negative(const Quadruple& q) {
  return static_cast<int>(std::count_if(q.v.begin(), q.v.end(),
                                        [](Curvature c) { return c < 0; }));
}

}  // namespace

std::string to_string(const Quadruple& q) {
  return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
         std::to_string(q[2]) + "," + std::to_string(q[3]) + ")";
}

std::int64_t descartes_form(const Quadruple& q) {
  __int128 squares = 0;
  __int128 sum = 0;
  for (Curvature c : q.v) {
    if (!fits_62_bits(c)) {
      throw ArithmeticOverflow("quadruple entry exceeds 62-bit magnitude: " + to_string(q));
    }
    squares += static_cast<__int128>(c) * c;
    sum += c;
  }
  // |sum| < 2^64, so sum^2 < 2^128 does not fit a signed __int128; split it.
  const unsigned __int128 abs_sum = sum < 0 ? -sum : sum;
  if (abs_sum >= (static_cast<unsigned __int128>(1) << 63)) {
    throw ArithmeticOverflow("Descartes form overflows: " + to_string(q));
  }
  return checked(2 * squares - sum * sum);
}

bool is_primitive(const Quadruple& q) {
  Curvature g = 0;
  for (Curvature c : q.v) g = std::gcd(g, c);
  return g == 1;
}

bool has_parity_signature(const Quadruple& q) {
  const auto even = std::count_if(q.v.begin(), q.v.end(),
                                  [](Curvature c) { return c % 2 == 0; });
  return even == 2;
}

Quadruple apply_generator(const Quadruple& q, int coord) {
  if (coord < 0 || coord > 3) {
    throw UsageError("generator coordinate must be in 0..3, got " + std::to_string(coord));
  }
  __int128 others = 0;
  for (int j = 0; j < 4; ++j) {
    if (j != coord) others += q[j];
  }
  Quadruple out = q;
  out[coord] = checked(2 * others - q[coord]);
  return out;
}

Quadruple reduce_to_root(Quadruple q) {
  if (descartes_form(q) != 0) {
    throw InvalidQuadruple(InvalidQuadruple::Reason::not_descartes,
                           "not a Descartes quadruple: " + to_string(q));
  }
  for (;;) {
    if (std::find(q.v.begin(), q.v.end(), 0) != q.v.end()) {
      throw UnsupportedPacking("quadruple reduces to a zero curvature (unbounded packing): " +
                               to_string(q));
    }
    const Curvature top = *std::max_element(q.v.begin(), q.v.end());
    bool reduced = false;
    for (int i = 0; i < 4 && !reduced; ++i) {
      if (q[i] != top) continue;
      Quadruple next = apply_generator(q, i);
      if (next[i] < q[i]) {
        q = next;
        reduced = true;
      }
    }
    if (!reduced) break;
  }
  if (count_negative(q) != 1) {
    throw UnsupportedPacking("quadruple does not reduce to a bounded root: " + to_string(q));
  }
  std::sort(q.v.begin(), q.v.end());
  return q;
}

PackingDescriptor validate_packing(const Quadruple& root, std::string name) {
  using Reason = InvalidQuadruple::Reason;
  if (descartes_form(root) != 0) {
    throw InvalidQuadruple(Reason::not_descartes, "not a Descartes quadruple: " + to_string(root));
  }
  if (std::find(root.v.begin(), root.v.end(), 0) != root.v.end() || count_negative(root) != 1) {
    throw UnsupportedPacking("unbounded packing (needs exactly one negative and no zero entry): " +
                             to_string(root));
  }
  if (!is_primitive(root)) {
    throw InvalidQuadruple(Reason::imprimitive, "imprimitive quadruple: " + to_string(root));
  }
  if (!has_parity_signature(root)) {
    throw InvalidQuadruple(Reason::bad_parity, "quadruple lacks two even and two odd entries: " +
                                                   to_string(root));
  }
  if (!(root[0] < 0 && root[1] <= root[2] && root[2] <= root[3])) {
    throw InvalidQuadruple(Reason::not_root,
                           "root must be sorted with the bounding curvature first: " +
                               to_string(root));
  }
  if (root[0] + root[1] + root[2] < root[3]) {
    throw InvalidQuadruple(Reason::not_root,
                           "not a root quadruple (S4 decreases the maximum): " + to_string(root));
  }
  return PackingDescriptor{root, std::move(name)};
}

Quadruple parse_quadruple(std::string_view text) {
  Quadruple q;
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t end = text.find(',', pos);
    if ((i < 3) == (end == std::string_view::npos)) {
      throw UsageError("expected four comma-separated integers: '" + std::string(text) + "'");
    }
    std::string_view field = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    const char* first = field.data();
    const char* last = first + field.size();
    if (!field.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, q[i]);
    if (field.empty() || ec != std::errc{} || ptr != last) {
      throw UsageError("bad curvature '" + std::string(field) + "' in '" + std::string(text) + "'");
    }
    pos = end + 1;
  }
  return q;
}

PackingDescriptor bugeye() { return validate_packing(Quadruple{{-1, 2, 2, 3}}, "bugeye"); }

PackingDescriptor coins() { return validate_packing(Quadruple{{-11, 21, 24, 28}}, "coins"); }

PackingDescriptor packing_from_spec(std::string_view spec) {
  if (spec == "bugeye") return bugeye();
  if (spec == "coins") return coins();
  return validate_packing(reduce_to_root(parse_quadruple(spec)), std::string(spec));
}

}  // namespace acp
