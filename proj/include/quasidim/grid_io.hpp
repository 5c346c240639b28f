#pragma once

// QDIMGRID binary files: 16-byte magic "QDIMGRID\0\0\0\0v001", then
// little-endian n (u32), center re/im (f64), half_width (f64) and n*n complex
// samples (f64 re, f64 im), row-major, bottom row first. Map files append a
// single normalization tag byte after the samples.

#include "quasidim/grid.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace quasidim {

struct GridFile {
  GridSpec grid;
  std::vector<cplx> samples;
  std::optional<std::uint8_t> tag;
};

void write_grid(std::ostream& os, const GridSpec& grid, std::span<const cplx> samples,
                std::optional<std::uint8_t> tag = std::nullopt);
GridFile read_grid(std::istream& is);

void write_grid_file(const std::filesystem::path& path, const GridSpec& grid,
                     std::span<const cplx> samples, std::optional<std::uint8_t> tag = std::nullopt);
GridFile read_grid_file(const std::filesystem::path& path);

}  // namespace quasidim
