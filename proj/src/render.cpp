#include "shiftforge/render.hpp"

#include <cstdio>
#include <sstream>

namespace shiftforge {

std::array<std::uint8_t, 3> palette(ColorId color) {
  // splitmix64 finalizer
  std::uint64_t z = static_cast<std::uint64_t>(color) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  // Keep channels away from pure black so grid lines stay visible.
  return {static_cast<std::uint8_t>(48 + (z & 0xff) % 208), static_cast<std::uint8_t>(48 + ((z >> 8) & 0xff) % 208),
          static_cast<std::uint8_t>(48 + ((z >> 16) & 0xff) % 208)};
}

namespace {

// Side of the cell (0 N, 1 E, 2 S, 3 W) owning pixel (i, j), j from the top.
int quadrant(std::size_t i, std::size_t j, std::size_t c) {
  const long dx = 2 * static_cast<long>(i) + 1 - static_cast<long>(c);
  const long dy = 2 * static_cast<long>(j) + 1 - static_cast<long>(c);
  const long adx = dx < 0 ? -dx : dx, ady = dy < 0 ? -dy : dy;
  if (ady >= adx) return dy < 0 ? 0 : 2;
  return dx > 0 ? 1 : 3;
}

ColorId side_color(const Tile& t, int side) {
  switch (side) {
    case 0: return t.north;
    case 1: return t.east;
    case 2: return t.south;
    default: return t.west;
  }
}

std::string hex(const std::array<std::uint8_t, 3>& rgb) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::string render_ppm(const TileSet& ts, const Grid<TileIndex>& g, std::size_t c) {
  const std::size_t w = g.width() * c, h = g.height() * c;
  std::string out = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  out.reserve(out.size() + w * h * 3);
  for (std::size_t py = 0; py < h; ++py) {
    const std::size_t y = g.height() - 1 - py / c;
    for (std::size_t px = 0; px < w; ++px) {
      const Tile& t = ts[g.at(px / c, y)];
      const auto rgb = palette(side_color(t, quadrant(px % c, py % c, c)));
      out.append(reinterpret_cast<const char*>(rgb.data()), 3);
    }
  }
  return out;
}

std::string render_svg(const TileSet& ts, const Grid<TileIndex>& g, std::size_t c) {
  std::ostringstream out;
  const std::size_t w = g.width() * c, h = g.height() * c;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
      << w << ' ' << h << "\">\n";
  for (std::size_t r = 0; r < g.height(); ++r) {
    const std::size_t y = g.height() - 1 - r;
    for (std::size_t x = 0; x < g.width(); ++x) {
      const Tile& t = ts[g.at(x, y)];
      const std::size_t x0 = x * c, y0 = r * c, x1 = x0 + c, y1 = y0 + c;
      // Doubled coordinates keep the centre on an integer.
      const std::size_t cx = x0 + x1, cy = y0 + y1;
      const std::size_t corners[4][4] = {{x0, y0, x1, y0}, {x1, y0, x1, y1}, {x1, y1, x0, y1}, {x0, y1, x0, y0}};
      for (int s = 0; s < 4; ++s) {
        const auto* k = corners[s];
        out << "<polygon points=\"" << k[0] << ',' << k[1] << ' ' << k[2] << ',' << k[3] << ' ' << cx / 2
            << (cx % 2 ? ".5" : "") << ',' << cy / 2 << (cy % 2 ? ".5" : "") << "\" fill=\""
            << hex(palette(side_color(t, s))) << "\"/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const TileSet& tileset, const Grid<TileIndex>& cells, bool torus, const RenderSpec& spec) {
  if (spec.cell_pixels == 0) throw InvalidInput("cell size must be at least one pixel");
  const bool ok = torus ? validate_torus(tileset, TorusTiling{cells}) : validate_tiling(tileset, Tiling{cells});
  if (!ok) throw ValidationFailure("tiling does not match the tile set");
  return spec.format == ImageFormat::kPpm ? render_ppm(tileset, cells, spec.cell_pixels)
                                          : render_svg(tileset, cells, spec.cell_pixels);
}

}  // namespace shiftforge
