#pragma once

// Deterministic raster (binary PPM) and vector (SVG) renders of tilings.
// Each cell is cut along its diagonals into four triangles painted with the
// colors of the corresponding sides.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "shiftforge/core.hpp"

namespace shiftforge {

enum class ImageFormat { kPpm, kSvg };

struct RenderSpec {
  std::size_t cell_pixels = 16;
  ImageFormat format = ImageFormat::kPpm;
};

// Fixed hash of the color id; identical across runs and platforms.
std::array<std::uint8_t, 3> palette(ColorId color);

// Throws ValidationFailure when the grid is not a valid tiling (with
// wraparound when `torus` is set).
std::string render(const TileSet& tileset, const Grid<TileIndex>& cells, bool torus, const RenderSpec& spec);

}  // namespace shiftforge
