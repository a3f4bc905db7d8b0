#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "acp/enumerate.hpp"

namespace acp {

// ACPH layout, all little-endian:
//   "ACPH" | u32 version (=1) | 4 x i64 root | u64 lo | u64 hi | (hi-lo) x u32
inline constexpr std::uint32_t kAcphVersion = 1;

std::vector<std::uint8_t> encode_acph(const CurvatureHistogram& hist);
CurvatureHistogram decode_acph(const std::vector<std::uint8_t>& bytes);

void write_acph(std::ostream& out, const CurvatureHistogram& hist);
CurvatureHistogram read_acph(std::istream& in);

void save_acph(const std::filesystem::path& path, const CurvatureHistogram& hist);
CurvatureHistogram load_acph(const std::filesystem::path& path);

}  // namespace acp
