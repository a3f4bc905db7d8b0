#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "acp/core.hpp"
#include "acp/enumerate.hpp"

namespace acp {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

// Cumulative statistics for circles with curvature < x.
struct PrimeStatRow {
  Curvature x = 0;
  std::uint64_t circles = 0;  // N_P(x), bounding circle included
  double psi = 0;             // sum of log a over prime curvatures a
  std::uint64_t primes = 0;   // pi_P(x)
  double psi2 = 0;            // sum of log a log b over tangent prime pairs

  double ratio_psi() const { return psi / static_cast<double>(circles); }
  double ratio_psi2_over_3n() const { return psi2 / (3.0 * static_cast<double>(circles)); }
};

struct PrimeStatSeries {
  Quadruple root;
  std::vector<PrimeStatRow> rows;
};

// Geometric grid from x_min to x_max (both included), rounded to integers
// and deduplicated.
std::vector<Curvature> geometric_checkpoints(Curvature x_min, Curvature x_max, std::size_t count);

// All statistics at every checkpoint from a single traversal bounded by the
// largest checkpoint.
PrimeStatSeries prime_stats(const PackingDescriptor& packing, std::vector<Curvature> checkpoints,
                            const RunOptions& opt = {});

PrimeStatSeries ratio_series(const PackingDescriptor& packing, Curvature x_max,
                             std::size_t checkpoint_count, const RunOptions& opt = {},
                             Curvature x_min = 10);

double psi(const PackingDescriptor& packing, Curvature x, const RunOptions& opt = {});
std::uint64_t pi_count(const PackingDescriptor& packing, Curvature x, const RunOptions& opt = {});
double psi2(const PackingDescriptor& packing, Curvature x, const RunOptions& opt = {});

// x,N,psi,pi,psi2,ratio_psi,ratio_psi2_over_3N with 12 significant digits.
void write_csv(std::ostream& out, const PrimeStatSeries& series);

}  // namespace acp
