#include "acp/localglobal.hpp"

#include <cmath>

#include "acp/error.hpp"
#include "json.hpp"

namespace acp {

namespace {

void require_residue(int residue) {
  if (residue < 0 || residue > 23) {
    throw UsageError("residue must be in 0..23, got " + std::to_string(residue));
  }
}

// First x >= lo with x = residue (mod 24).
std::uint64_t first_member(std::uint64_t lo, int residue) {
  const std::uint64_t r = static_cast<std::uint64_t>(residue);
  return lo + (r + 24 - lo % 24) % 24;
}

}  // namespace

std::string ExceptionReport::to_json() const {
  nlohmann::ordered_json j;
  j["root"] = root.v;
  j["lo"] = lo;
  j["hi"] = hi;
  j["exceptions"] = exceptions;
  nlohmann::ordered_json groups = nlohmann::ordered_json::object();
  for (const auto& [residue, values] : by_residue) groups[std::to_string(residue)] = values;
  j["by_residue"] = groups;
  return j.dump();
}

ExceptionReport find_exceptions(const CurvatureHistogram& hist, const ResidueProfile& profile,
                                std::optional<int> residue) {
  if (residue) require_residue(*residue);
  ExceptionReport report{hist.root, hist.lo, hist.hi, {}, {}};
  for (std::uint64_t n = hist.lo; n < hist.hi; ++n) {
    const int r = static_cast<int>(n % 24);
    if (residue && r != *residue) continue;
    if (!profile.is_admissible(static_cast<std::int64_t>(n)) || hist.counts[n - hist.lo] != 0) {
      continue;
    }
    report.exceptions.push_back(n);
    report.by_residue[r].push_back(n);
  }
  return report;
}

ExceptionReport find_exceptions(const PackingDescriptor& packing, Curvature lo, Curvature hi,
                                std::optional<int> residue, const RunOptions& opt) {
  if (residue) require_residue(*residue);
  const ResidueProfile profile = gamma_profile(packing);
  return find_exceptions(histogram(packing, lo, hi, opt), profile, residue);
}

FrequencyDistribution frequency_distribution(const CurvatureHistogram& hist, int residue) {
  require_residue(residue);
  FrequencyDistribution dist;
  dist.residue = residue;
  dist.lo = hist.lo;
  dist.hi = hist.hi;
  double sum_sq = 0;
  for (std::uint64_t x = first_member(hist.lo, residue); x < hist.hi; x += 24) {
    const std::uint32_t m = hist.counts[x - hist.lo];
    ++dist.delta[m];
    ++dist.members;
    dist.total += m;
    sum_sq += static_cast<double>(m) * m;
  }
  if (dist.members > 0) {
    const double n = static_cast<double>(dist.members);
    dist.mean = static_cast<double>(dist.total) / n;
    dist.variance = std::max(0.0, sum_sq / n - dist.mean * dist.mean);
  }
  return dist;
}

double predicted_mean(const ResidueProfile& profile, int residue, Curvature lo, Curvature hi,
                      const MeanInputs& inputs) {
  require_residue(residue);
  if (lo < 1 || hi <= lo) throw UsageError("predicted_mean needs 1 <= lo < hi");
  double growth = 0;
  if (inputs.mode == MeanMode::measured) {
    if (!inputs.circles_lo || !inputs.circles_hi) {
      throw UsageError("measured mode needs N(lo) and N(hi)");
    }
    growth = static_cast<double>(*inputs.circles_hi) - static_cast<double>(*inputs.circles_lo);
  } else {
    if (!inputs.c || !inputs.delta) throw UsageError("asymptotic mode needs c_P and delta");
    growth = *inputs.c * (std::pow(static_cast<double>(hi), *inputs.delta) -
                          std::pow(static_cast<double>(lo), *inputs.delta));
  }
  return 24.0 * profile.gamma[residue].to_double() * growth / static_cast<double>(hi - lo);
}

double predicted_mean(const PackingDescriptor& packing, int residue, Curvature lo, Curvature hi,
                      const RunOptions& opt) {
  MeanInputs in;
  in.mode = MeanMode::measured;
  in.circles_lo = count_circles(packing, lo, opt);
  in.circles_hi = count_circles(packing, hi, opt);
  return predicted_mean(gamma_profile(packing), residue, lo, hi, in);
}

GrowthFit fit_growth(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 3) throw UsageError("fit_growth needs at least three samples");
  double sx = 0, sy = 0;
  for (const auto& [x, n] : samples) {
    if (!(x > 0) || !(n > 0)) throw UsageError("fit_growth needs positive samples");
    sx += std::log(x);
    sy += std::log(n);
  }
  const double k = static_cast<double>(samples.size());
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0;
  for (const auto& [x, n] : samples) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(n) - my);
  }
  if (sxx <= 1e-12) throw UsageError("fit_growth samples are degenerate (equal x)");
  const double slope = sxy / sxx;
  return {slope, std::exp(my - slope * mx)};
}

}  // namespace acp
