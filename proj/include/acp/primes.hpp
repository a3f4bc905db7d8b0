#pragma once

#include <cstdint>
#include <vector>

namespace acp {

// Deterministic Miller-Rabin for the full 64-bit range (first twelve prime
// bases).
bool is_prime_mr(std::uint64_t n);

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// One bit per odd number below `limit`, filled segment by segment.
class OddPrimeSieve {
 public:
  explicit OddPrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::uint64_t bytes() const { return bits_.size() * sizeof(std::uint64_t); }

  // n must be < limit().
  bool test(std::uint64_t n) const {
    if (n < 3) return n == 2;
    if ((n & 1) == 0) return false;
    const std::uint64_t i = n >> 1;
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;  // bit i set <=> 2i+1 is prime
};

// Sieve lookups below the sieve limit, Miller-Rabin above it.
class PrimalityTester {
 public:
  enum class Backend { sieve, miller_rabin };

  // Sieve up to `bound` when it fits the memory budget, otherwise MR only.
  static PrimalityTester for_bound(std::uint64_t bound, std::uint64_t memory_budget);
  static PrimalityTester miller_rabin_only() { return PrimalityTester(); }

  Backend backend() const { return sieve_.limit() > 0 ? Backend::sieve : Backend::miller_rabin; }

  bool operator()(std::int64_t n) const {
    if (n < 2) return false;
    const auto u = static_cast<std::uint64_t>(n);
    return u < sieve_.limit() ? sieve_.test(u) : is_prime_mr(u);
  }

 private:
  PrimalityTester() : sieve_(0) {}
  explicit PrimalityTester(std::uint64_t limit) : sieve_(limit) {}

  OddPrimeSieve sieve_;
};

}  // namespace acp
