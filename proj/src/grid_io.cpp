#include "quasidim/grid_io.hpp"

#include "quasidim/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace quasidim {

namespace {

constexpr std::array<char, 16> kMagic = {'Q', 'D', 'I', 'M', 'G', 'R', 'I', 'D',
                                         '\0', '\0', '\0', '\0', 'v', '0', '0', '1'};

template <typename T>
void put_le(std::ostream& os, T value) {
  auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  os.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

template <typename T>
T get_le(std::istream& is) {
  std::array<unsigned char, sizeof(T)> bytes{};
  if (!is.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw FormatError("QDIMGRID: unexpected end of file");
  }
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  return std::bit_cast<T>(bytes);
}

}  // namespace

void write_grid(std::ostream& os, const GridSpec& grid, std::span<const cplx> samples,
                std::optional<std::uint8_t> tag) {
  grid.validate();
  if (samples.size() != grid.size()) throw InvalidArgument("write_grid: sample count mismatch");
  os.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(grid.n));
  put_le<double>(os, grid.center.real());
  put_le<double>(os, grid.center.imag());
  put_le<double>(os, grid.half_width);
  for (const cplx& z : samples) {
    put_le<double>(os, z.real());
    put_le<double>(os, z.imag());
  }
  if (tag) put_le<std::uint8_t>(os, *tag);
  if (!os) throw FormatError("QDIMGRID: write failed");
}

GridFile read_grid(std::istream& is) {
  std::array<char, 16> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
    throw FormatError("QDIMGRID: bad magic");
  }
  GridFile out;
  out.grid.n = get_le<std::uint32_t>(is);
  const double re = get_le<double>(is);
  const double im = get_le<double>(is);
  out.grid.center = {re, im};
  out.grid.half_width = get_le<double>(is);
  try {
    out.grid.validate();
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("QDIMGRID: ") + e.what());
  }
  out.samples.resize(out.grid.size());
  for (cplx& z : out.samples) {
    const double a = get_le<double>(is);
    const double b = get_le<double>(is);
    z = {a, b};
  }
  char extra = 0;
  if (is.read(&extra, 1)) {
    out.tag = static_cast<std::uint8_t>(extra);
    if (is.peek() != std::char_traits<char>::eof()) throw FormatError("QDIMGRID: trailing data");
  }
  return out;
}

void write_grid_file(const std::filesystem::path& path, const GridSpec& grid,
                     std::span<const cplx> samples, std::optional<std::uint8_t> tag) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw FormatError("cannot open " + path.string() + " for writing");
  write_grid(os, grid, samples, tag);
}

GridFile read_grid_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open " + path.string());
  return read_grid(is);
}

}  // namespace quasidim
