#pragma once

// Domain types shared by every module: Wang tiles, tile sets, letter grids
// and tilings.
//
// Orientation: y = 0 is the bottom row and north is the top edge of a cell.
// A horizontal pair matches when east(left) == west(right); a vertical pair
// matches when north(lower) == south(upper). Textual grids are written top
// row first.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shiftforge/error.hpp"

namespace shiftforge {

using ColorId = std::uint32_t;
using TileIndex = std::uint32_t;
using Letter = char;

struct Tile {
  ColorId north = 0;
  ColorId east = 0;
  ColorId south = 0;
  ColorId west = 0;

  friend auto operator<=>(const Tile&, const Tile&) = default;
};

// A finite set of Wang tiles over the color universe 0..color_count-1.
// Construction rejects duplicate tiles and out-of-universe colors.
class TileSet {
 public:
  TileSet() = default;
  TileSet(std::string name, std::size_t color_count, std::vector<Tile> tiles,
          std::vector<std::string> color_labels = {});

  const std::string& name() const { return name_; }
  std::size_t color_count() const { return color_count_; }
  const std::vector<Tile>& tiles() const { return tiles_; }
  std::size_t size() const { return tiles_.size(); }
  bool empty() const { return tiles_.empty(); }
  const Tile& operator[](std::size_t i) const { return tiles_[i]; }

  // Optional human-readable names, either empty or one per color.
  const std::vector<std::string>& color_labels() const { return color_labels_; }
  std::string color_label(ColorId c) const;

  friend bool operator==(const TileSet&, const TileSet&) = default;

 private:
  std::string name_;
  std::size_t color_count_ = 0;
  std::vector<Tile> tiles_;
  std::vector<std::string> color_labels_;
};

// Dense row-major grid, cell (x, y) with y = 0 at the bottom.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t width, std::size_t height, T fill = T{})
      : width_(width), height_(height), cells_(width * height, fill) {}
  Grid(std::size_t width, std::size_t height, std::vector<T> cells)
      : width_(width), height_(height), cells_(std::move(cells)) {
    if (cells_.size() != width_ * height_) throw InvalidInput("grid cell count does not match its dimensions");
  }

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t cell_count() const { return cells_.size(); }

  T& at(std::size_t x, std::size_t y) { return cells_[y * width_ + x]; }
  const T& at(std::size_t x, std::size_t y) const { return cells_[y * width_ + x]; }

  // Row-major storage, bottom row first.
  const std::vector<T>& cells() const { return cells_; }
  std::vector<T>& cells() { return cells_; }

  friend bool operator==(const Grid&, const Grid&) = default;
  friend auto operator<=>(const Grid&, const Grid&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<T> cells_;
};

// Finite rectangle of tile indices.
struct Tiling {
  Grid<TileIndex> cells;

  std::size_t width() const { return cells.width(); }
  std::size_t height() const { return cells.height(); }
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

// p x q block whose matching constraints wrap around in both directions.
struct TorusTiling {
  Grid<TileIndex> cells;

  std::size_t p() const { return cells.width(); }
  std::size_t q() const { return cells.height(); }
  friend bool operator==(const TorusTiling&, const TorusTiling&) = default;
};

// Finite alphabet of single-character letters, kept sorted and unique.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool contains(Letter c) const;
  // Position of c in the sorted letter list; throws InvalidInput if absent.
  std::size_t index_of(Letter c) const;
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Letter> letters_;
};

using Pattern = Grid<Letter>;
using Window = Grid<Letter>;

// 2D subshift of finite type.
class SftSpec {
 public:
  SftSpec() = default;
  SftSpec(Alphabet alphabet, std::vector<Pattern> forbidden);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Pattern>& forbidden() const { return forbidden_; }
  // Max side of any forbidden pattern; 0 when nothing is forbidden.
  std::size_t window() const { return window_; }

  friend bool operator==(const SftSpec&, const SftSpec&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Pattern> forbidden_;
  std::size_t window_ = 0;
};

// Builds a pattern from rows listed top row first.
Pattern pattern_from_rows(const std::vector<std::string>& rows_top_first);
std::vector<std::string> rows_top_first(const Grid<Letter>& grid);

bool validate_tiling(const TileSet& tileset, const Tiling& tiling);
bool validate_torus(const TileSet& tileset, const TorusTiling& tiling);

struct Normalized {
  TileSet tileset;
  // index_map[i] is the normalized index of original tile i.
  std::vector<TileIndex> index_map;
};

// Drops unused colors and duplicate tiles, renumbers colors by rank and sorts
// tiles by (north, east, south, west).
Normalized normalize_with_map(const TileSet& tileset);
TileSet normalize_tileset(const TileSet& tileset);

// Same, for a raw tile list that may repeat tiles; index_map then sends
// every copy of a tile to the same normalized index.
Normalized normalize_tiles(std::string name, const std::vector<Tile>& tiles);

// Builds a tile set from possibly-duplicated tiles, keeping first
// occurrences in order.
TileSet make_tileset(std::string name, std::vector<Tile> tiles);

}  // namespace shiftforge
