#include "acp/histogram_io.hpp"

#include <fstream>
#include <iterator>

#include "acp/error.hpp"

namespace acp {

namespace {

constexpr std::size_t kHeaderSize = 4 + 4 + 4 * 8 + 8 + 8;

template <class T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  auto u = static_cast<std::make_unsigned_t<T>>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>(u & 0xFF));
    u = static_cast<decltype(u)>(u >> 8);
  }
}

template <class T>
T get_le(const std::uint8_t* p) {
  std::make_unsigned_t<T> u = 0;
  for (std::size_t i = sizeof(T); i-- > 0;) {
    u = static_cast<decltype(u)>((u << 8) | p[i]);
  }
  return static_cast<T>(u);
}

}  // namespace

std::vector<std::uint8_t> encode_acph(const CurvatureHistogram& hist) {
  if (hist.hi < hist.lo || hist.counts.size() != hist.hi - hist.lo) {
    throw FormatError("histogram window does not match its count array");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + 4 * hist.counts.size());
  for (char c : {'A', 'C', 'P', 'H'}) out.push_back(static_cast<std::uint8_t>(c));
  put_le<std::uint32_t>(out, kAcphVersion);
  for (Curvature c : hist.root.v) put_le<std::int64_t>(out, c);
  put_le<std::uint64_t>(out, hist.lo);
  put_le<std::uint64_t>(out, hist.hi);
  for (std::uint32_t c : hist.counts) put_le<std::uint32_t>(out, c);
  return out;
}

CurvatureHistogram decode_acph(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("ACPH file shorter than its header");
  const std::uint8_t* p = bytes.data();
  if (p[0] != 'A' || p[1] != 'C' || p[2] != 'P' || p[3] != 'H') {
    throw FormatError("missing ACPH magic");
  }
  const auto version = get_le<std::uint32_t>(p + 4);
  if (version != kAcphVersion) {
    throw FormatError("unsupported ACPH version " + std::to_string(version));
  }
  CurvatureHistogram hist;
  for (int i = 0; i < 4; ++i) hist.root[i] = get_le<std::int64_t>(p + 8 + 8 * i);
  hist.lo = get_le<std::uint64_t>(p + 40);
  hist.hi = get_le<std::uint64_t>(p + 48);
  if (hist.hi < hist.lo) throw FormatError("ACPH window has hi < lo");
  const std::uint64_t n = hist.hi - hist.lo;
  if ((bytes.size() - kHeaderSize) / 4 != n || (bytes.size() - kHeaderSize) % 4 != 0) {
    throw FormatError("ACPH payload length does not match the window [" +
                      std::to_string(hist.lo) + ", " + std::to_string(hist.hi) + ")");
  }
  hist.counts.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    hist.counts[i] = get_le<std::uint32_t>(p + kHeaderSize + 4 * i);
  }
  return hist;
}

void write_acph(std::ostream& out, const CurvatureHistogram& hist) {
  const auto bytes = encode_acph(hist);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("failed writing ACPH stream");
}

CurvatureHistogram read_acph(std::istream& in) {
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  return decode_acph(bytes);
}

void save_acph(const std::filesystem::path& path, const CurvatureHistogram& hist) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  write_acph(out, hist);
}

CurvatureHistogram load_acph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_acph(in);
}

}  // namespace acp
