#include "shiftforge/core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace shiftforge {

TileSet::TileSet(std::string name, std::size_t color_count, std::vector<Tile> tiles,
                 std::vector<std::string> color_labels)
    : name_(std::move(name)),
      color_count_(color_count),
      tiles_(std::move(tiles)),
      color_labels_(std::move(color_labels)) {
  if (!color_labels_.empty() && color_labels_.size() != color_count_)
    throw InvalidInput("color label count does not match color count");
  for (const Tile& t : tiles_) {
    if (t.north >= color_count_ || t.east >= color_count_ || t.south >= color_count_ || t.west >= color_count_)
      throw InvalidInput("tile references a color outside the universe of " + std::to_string(color_count_));
  }
  std::vector<Tile> sorted = tiles_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("tile set '" + name_ + "' contains a duplicate tile");
}

std::string TileSet::color_label(ColorId c) const {
  if (c < color_labels_.size() && !color_labels_[c].empty()) return color_labels_[c];
  return std::to_string(c);
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end());
  letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
}

bool Alphabet::contains(Letter c) const { return std::binary_search(letters_.begin(), letters_.end(), c); }

std::size_t Alphabet::index_of(Letter c) const {
  auto it = std::lower_bound(letters_.begin(), letters_.end(), c);
  if (it == letters_.end() || *it != c) throw InvalidInput(std::string("letter '") + c + "' is not in the alphabet");
  return static_cast<std::size_t>(it - letters_.begin());
}

SftSpec::SftSpec(Alphabet alphabet, std::vector<Pattern> forbidden)
    : alphabet_(std::move(alphabet)), forbidden_(std::move(forbidden)) {
  if (alphabet_.size() == 0) throw InvalidInput("SFT alphabet is empty");
  for (const Pattern& p : forbidden_) {
    if (p.width() == 0 || p.height() == 0) throw InvalidInput("forbidden pattern has an empty side");
    for (Letter c : p.cells())
      if (!alphabet_.contains(c)) throw InvalidInput(std::string("pattern letter '") + c + "' is not in the alphabet");
    window_ = std::max({window_, p.width(), p.height()});
  }
}

Pattern pattern_from_rows(const std::vector<std::string>& rows_top_first) {
  if (rows_top_first.empty() || rows_top_first.front().empty()) throw InvalidInput("pattern has no cells");
  const std::size_t w = rows_top_first.front().size();
  const std::size_t h = rows_top_first.size();
  Pattern p(w, h);
  for (std::size_t r = 0; r < h; ++r) {
    if (rows_top_first[r].size() != w) throw InvalidInput("pattern rows have unequal lengths");
    for (std::size_t x = 0; x < w; ++x) p.at(x, h - 1 - r) = rows_top_first[r][x];
  }
  return p;
}

std::vector<std::string> rows_top_first(const Grid<Letter>& grid) {
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < grid.height(); ++r) {
    std::string row;
    const std::size_t y = grid.height() - 1 - r;
    for (std::size_t x = 0; x < grid.width(); ++x) row.push_back(grid.at(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void check_indices(const TileSet& tileset, const Grid<TileIndex>& cells) {
  for (TileIndex i : cells.cells())
    if (i >= tileset.size())
      throw InvalidInput("tile index " + std::to_string(i) + " out of range for a set of " +
                         std::to_string(tileset.size()) + " tiles");
}

bool grid_matches(const TileSet& ts, const Grid<TileIndex>& g, bool wrap) {
  const std::size_t w = g.width(), h = g.height();
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const Tile& t = ts[g.at(x, y)];
      if (x + 1 < w || wrap) {
        if (t.east != ts[g.at((x + 1) % w, y)].west) return false;
      }
      if (y + 1 < h || wrap) {
        if (t.north != ts[g.at(x, (y + 1) % h)].south) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool validate_tiling(const TileSet& tileset, const Tiling& tiling) {
  check_indices(tileset, tiling.cells);
  return grid_matches(tileset, tiling.cells, false);
}

bool validate_torus(const TileSet& tileset, const TorusTiling& tiling) {
  check_indices(tileset, tiling.cells);
  return grid_matches(tileset, tiling.cells, true);
}

namespace {

Normalized normalize_impl(const std::string& name, const std::vector<Tile>& tiles,
                          const std::vector<std::string>& color_labels) {
  std::set<ColorId> used;
  for (const Tile& t : tiles) used.insert({t.north, t.east, t.south, t.west});
  std::map<ColorId, ColorId> rank;
  std::vector<std::string> labels;
  for (ColorId c : used) {
    rank.emplace(c, static_cast<ColorId>(rank.size()));
    if (!color_labels.empty()) labels.push_back(color_labels[c]);
  }

  std::vector<Tile> renamed;
  renamed.reserve(tiles.size());
  for (const Tile& t : tiles) renamed.push_back({rank[t.north], rank[t.east], rank[t.south], rank[t.west]});
  std::vector<Tile> sorted = renamed;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Normalized out{TileSet(name, used.size(), sorted, std::move(labels)), {}};
  out.index_map.reserve(renamed.size());
  for (const Tile& t : renamed)
    out.index_map.push_back(
        static_cast<TileIndex>(std::lower_bound(sorted.begin(), sorted.end(), t) - sorted.begin()));
  return out;
}

}  // namespace

Normalized normalize_with_map(const TileSet& tileset) {
  return normalize_impl(tileset.name(), tileset.tiles(), tileset.color_labels());
}

Normalized normalize_tiles(std::string name, const std::vector<Tile>& tiles) { return normalize_impl(name, tiles, {}); }

TileSet normalize_tileset(const TileSet& tileset) { return normalize_with_map(tileset).tileset; }

TileSet make_tileset(std::string name, std::vector<Tile> tiles) {
  ColorId max_color = 0;
  bool any = false;
  std::vector<Tile> unique;
  std::set<Tile> seen;
  for (const Tile& t : tiles) {
    max_color = std::max({max_color, t.north, t.east, t.south, t.west});
    any = true;
    if (seen.insert(t).second) unique.push_back(t);
  }
  return TileSet(std::move(name), any ? max_color + 1 : 0, std::move(unique));
}

}  // namespace shiftforge
