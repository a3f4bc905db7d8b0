#include "acp/primestats.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "acp/error.hpp"
#include "acp/primes.hpp"

namespace acp {

namespace {

struct Bucket {
  std::uint64_t circles = 0;
  std::uint64_t primes = 0;
  CompensatedSum psi;
  CompensatedSum psi2;
};

// Each visit lands in the bucket of the first checkpoint strictly above its
// curvature; prefix sums over buckets give the cumulative rows.
struct StatsVisitor {
  const PrimalityTester* is_prime = nullptr;
  const std::vector<Curvature>* checkpoints = nullptr;
  std::vector<Bucket> buckets;

  std::size_t bucket_of(Curvature n) const {
    return static_cast<std::size_t>(
        std::upper_bound(checkpoints->begin(), checkpoints->end(), n) - checkpoints->begin());
  }

  void operator()(const NodeVisit& v) {
    const Curvature n = v.curvature();
    Bucket& b = buckets[bucket_of(n)];
    ++b.circles;
    if (!(*is_prime)(n)) return;
    ++b.primes;
    const double log_n = std::log(static_cast<double>(n));
    b.psi.add(log_n);
    double parents = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != v.coord && (*is_prime)(v.quad[j])) parents += std::log(static_cast<double>(v.quad[j]));
    }
    if (parents != 0) b.psi2.add(log_n * parents);
  }

  void merge(const StatsVisitor& o) {
    for (std::size_t i = 0; i < buckets.size(); ++i) {
      buckets[i].circles += o.buckets[i].circles;
      buckets[i].primes += o.buckets[i].primes;
      buckets[i].psi.add(o.buckets[i].psi);
      buckets[i].psi2.add(o.buckets[i].psi2);
    }
  }
};

}  // namespace

std::vector<Curvature> geometric_checkpoints(Curvature x_min, Curvature x_max, std::size_t count) {
  if (count < 2) throw UsageError("need at least two checkpoints");
  if (x_min < 2 || x_max < x_min) throw UsageError("checkpoints need 2 <= x_min <= x_max");
  std::vector<Curvature> out;
  const double ratio = std::log(static_cast<double>(x_max) / static_cast<double>(x_min));
  for (std::size_t k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(count - 1);
    out.push_back(std::llround(static_cast<double>(x_min) * std::exp(ratio * t)));
  }
  out.front() = x_min;
  out.back() = x_max;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PrimeStatSeries prime_stats(const PackingDescriptor& packing, std::vector<Curvature> checkpoints,
                            const RunOptions& opt) {
  if (checkpoints.empty()) throw UsageError("no checkpoints");
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  if (checkpoints.front() < 2) throw UsageError("checkpoints must be >= 2");
  const Curvature bound = checkpoints.back();

  const PrimalityTester is_prime = PrimalityTester::for_bound(
      static_cast<std::uint64_t>(bound), opt.memory_budget);
  const StatsVisitor proto{&is_prime, &checkpoints, std::vector<Bucket>(checkpoints.size() + 1)};

  // Root circles and the six tangencies among them. Kept out of `proto`,
  // which every worker copies.
  StatsVisitor seeds = proto;
  const Quadruple& root = packing.root;
  for (int i = 0; i < 4; ++i) {
    Bucket& b = seeds.buckets[root[i] < 0 ? 0 : seeds.bucket_of(root[i])];
    ++b.circles;
    if (!is_prime(root[i])) continue;
    ++b.primes;
    b.psi.add(std::log(static_cast<double>(root[i])));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (!is_prime(root[i]) || !is_prime(root[j])) continue;
      const Curvature larger = std::max(root[i], root[j]);
      seeds.buckets[seeds.bucket_of(larger)].psi2.add(std::log(static_cast<double>(root[i])) *
                                                      std::log(static_cast<double>(root[j])));
    }
  }

  const TraversalOptions topt{bound, opt.check_invariants, opt.threads};
  StatsVisitor acc = traverse_parallel(packing, topt, proto).acc;
  acc.merge(seeds);

  PrimeStatSeries series{root, {}};
  std::uint64_t circles = 0, primes = 0;
  CompensatedSum psi_sum, psi2_sum;
  for (std::size_t k = 0; k < checkpoints.size(); ++k) {
    const Bucket& b = acc.buckets[k];
    circles += b.circles;
    primes += b.primes;
    psi_sum.add(b.psi);
    psi2_sum.add(b.psi2);
    series.rows.push_back({checkpoints[k], circles, psi_sum.value(), primes, psi2_sum.value()});
  }
  return series;
}

PrimeStatSeries ratio_series(const PackingDescriptor& packing, Curvature x_max,
                             std::size_t checkpoint_count, const RunOptions& opt, Curvature x_min) {
  return prime_stats(packing, geometric_checkpoints(x_min, x_max, checkpoint_count), opt);
}

double psi(const PackingDescriptor& packing, Curvature x, const RunOptions& opt) {
  return prime_stats(packing, {x}, opt).rows.back().psi;
}

std::uint64_t pi_count(const PackingDescriptor& packing, Curvature x, const RunOptions& opt) {
  return prime_stats(packing, {x}, opt).rows.back().primes;
}

double psi2(const PackingDescriptor& packing, Curvature x, const RunOptions& opt) {
  return prime_stats(packing, {x}, opt).rows.back().psi2;
}

void write_csv(std::ostream& out, const PrimeStatSeries& series) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(12);
  out << "x,N,psi,pi,psi2,ratio_psi,ratio_psi2_over_3N\n";
  for (const PrimeStatRow& r : series.rows) {
    out << r.x << ',' << r.circles << ',' << r.psi << ',' << r.primes << ',' << r.psi2 << ','
        << r.ratio_psi() << ',' << r.ratio_psi2_over_3n() << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace acp
