#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acp/core.hpp"
#include "acp/enumerate.hpp"
#include "acp/orbits.hpp"

namespace acp {

// Admissible integers in [lo, hi) that never occur as a curvature.
struct ExceptionReport {
  Quadruple root;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> exceptions;  // ascending
  std::map<int, std::vector<std::uint64_t>> by_residue;

  std::string to_json() const;
};

ExceptionReport find_exceptions(const CurvatureHistogram& hist, const ResidueProfile& profile,
                                std::optional<int> residue = std::nullopt);

// Builds the histogram (single window; CapacityError asks for chunking when
// it does not fit the memory budget) and scans it.
ExceptionReport find_exceptions(const PackingDescriptor& packing, Curvature lo, Curvature hi,
                                std::optional<int> residue = std::nullopt,
                                const RunOptions& opt = {});

// delta(m, n): how many x in the window with x = n (mod 24) occur exactly m
// times as a curvature.
struct FrequencyDistribution {
  int residue = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::map<std::uint32_t, std::uint64_t> delta;
  std::uint64_t members = 0;  // integers of the class inside the window
  std::uint64_t total = 0;    // sum of m * delta[m]
  double mean = 0;
  double variance = 0;  // population variance
};

FrequencyDistribution frequency_distribution(const CurvatureHistogram& hist, int residue);

enum class MeanMode { measured, asymptotic };

// Inputs for the predicted mean multiplicity of class n over [lo, hi):
// 24 gamma(n) (N(hi) - N(lo)) / (hi - lo). Measured mode takes the circle
// counts; asymptotic mode takes N(x) = c x^delta.
struct MeanInputs {
  MeanMode mode = MeanMode::measured;
  std::optional<std::uint64_t> circles_lo;
  std::optional<std::uint64_t> circles_hi;
  std::optional<double> c;
  std::optional<double> delta;
};

double predicted_mean(const ResidueProfile& profile, int residue, Curvature lo, Curvature hi,
                      const MeanInputs& inputs);

// Measured mode with N(lo), N(hi) enumerated from the packing.
double predicted_mean(const PackingDescriptor& packing, int residue, Curvature lo, Curvature hi,
                      const RunOptions& opt = {});

struct GrowthFit {
  double delta = 0;
  double c = 0;
};

// Least squares of log N against log x.
GrowthFit fit_growth(const std::vector<std::pair<double, double>>& samples);

}  // namespace acp
