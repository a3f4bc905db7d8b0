#include "acp/primes.hpp"

#include <algorithm>
#include <cmath>

#include "acp/error.hpp"

namespace acp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

constexpr u64 kSegmentBits = u64{1} << 18;  // odd numbers per segment (32 KiB)

}  // namespace

bool is_prime_mr(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  const OddPrimeSieve sieve(u64{limit} + 1);
  out.push_back(2);
  for (u64 n = 3; n <= limit; n += 2) {
    if (sieve.test(n)) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

OddPrimeSieve::OddPrimeSieve(std::uint64_t limit) : limit_(limit) {
  if (limit_ == 0) return;
  const u64 odd_count = limit_ / 2;  // odd numbers 1, 3, ... below limit
  bits_.assign((odd_count + 63) / 64, ~u64{0});

  // Base primes up to sqrt(limit) by a plain byte sieve.
  const u64 root = isqrt(limit_) + 1;
  std::vector<char> small(root + 1, 1);
  std::vector<u64> base;
  for (u64 p = 3; p <= root; p += 2) {
    if (!small[p]) continue;
    base.push_back(p);
    for (u64 m = p * p; m <= root; m += 2 * p) small[m] = 0;
  }

  // Segmented pass: bit index i stands for 2i+1.
  std::vector<u64> next(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) next[k] = (base[k] * base[k]) >> 1;
  for (u64 seg = 0; seg < odd_count; seg += kSegmentBits) {
    const u64 end = std::min(odd_count, seg + kSegmentBits);
    for (std::size_t k = 0; k < base.size(); ++k) {
      u64 i = next[k];
      const u64 p = base[k];
      for (; i < end; i += p) bits_[i >> 6] &= ~(u64{1} << (i & 63));
      next[k] = i;
    }
  }
  bits_[0] &= ~u64{1};  // 1 is not prime
  // Clear bits at or beyond limit so test() stays honest for the tail word.
  for (u64 i = odd_count; i < bits_.size() * 64; ++i) bits_[i >> 6] &= ~(u64{1} << (i & 63));
}

PrimalityTester PrimalityTester::for_bound(std::uint64_t bound, std::uint64_t memory_budget) {
  const u64 sieve_bytes = bound / 16 + 8;
  if (bound <= (u64{1} << 31) && sieve_bytes <= memory_budget) return PrimalityTester(bound);
  return PrimalityTester();
}

}  // namespace acp
