#include <doctest.h>

#include "shiftforge/render.hpp"
#include "shiftforge/robinson.hpp"
#include "shiftforge/solve.hpp"

using namespace shiftforge;

TEST_CASE("ppm header and size") {
  const TileSet one("one", 1, {{0, 0, 0, 0}});
  const std::string img = render(one, Grid<TileIndex>(1, 1, 0), false, {8, ImageFormat::kPpm});
  const std::string header = "P6\n8 8\n255\n";
  REQUIRE(img.size() == header.size() + 8 * 8 * 3);
  CHECK(img.substr(0, header.size()) == header);
  const auto rgb = palette(0);
  CHECK(static_cast<std::uint8_t>(img[header.size()]) == rgb[0]);
}

TEST_CASE("triangles take their side's color") {
  const TileSet ts("four", 4, {{0, 1, 2, 3}});
  const std::string img = render(ts, Grid<TileIndex>(1, 1, 0), false, {4, ImageFormat::kPpm});
  const std::size_t base = std::string("P6\n4 4\n255\n").size();
  auto px = [&](std::size_t x, std::size_t y) {
    const std::size_t o = base + (y * 4 + x) * 3;
    return std::array<std::uint8_t, 3>{static_cast<std::uint8_t>(img[o]), static_cast<std::uint8_t>(img[o + 1]),
                                       static_cast<std::uint8_t>(img[o + 2])};
  };
  CHECK(px(1, 0) == palette(0));
  CHECK(px(3, 1) == palette(1));
  CHECK(px(2, 3) == palette(2));
  CHECK(px(0, 2) == palette(3));
}

TEST_CASE("renders are deterministic and validated") {
  const TileSet ts = robinson_tileset().tileset;
  const RectangleResult r = solve_rectangle(ts, 8, 8);
  REQUIRE(r.tiling);
  for (ImageFormat f : {ImageFormat::kPpm, ImageFormat::kSvg}) {
    const std::string a = render(ts, r.tiling->cells, false, {5, f});
    CHECK(a == render(ts, r.tiling->cells, false, {5, f}));
  }
  const std::string svg = render(ts, r.tiling->cells, false, {5, ImageFormat::kSvg});
  CHECK(svg.rfind("<svg", 0) == 0);

  const TileSet mismatch("m", 3, {{0, 1, 0, 2}});
  CHECK_THROWS_AS(render(mismatch, Grid<TileIndex>(2, 1, 0), false, {}), ValidationFailure);
  CHECK_THROWS_AS(render(mismatch, Grid<TileIndex>(1, 1, 0), true, {}), ValidationFailure);
  CHECK_THROWS_AS(render(mismatch, Grid<TileIndex>(1, 1, 0), false, {0, ImageFormat::kPpm}), InvalidInput);
}

TEST_CASE("palette is a fixed function of the id") {
  CHECK(palette(7) == palette(7));
  CHECK(palette(0) != palette(1));
}
