#pragma once

// Compilers from rule systems to Wang tile sets.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shiftforge/core.hpp"
#include "shiftforge/solve.hpp"

namespace shiftforge {

struct TileCompilation {
  TileSet tileset;
  std::vector<std::string> decode;      // per tile: the letter d(tile)
  std::vector<std::string> provenance;  // per tile: what the tile encodes
};

// Overlap coding. Tiles are the legal k x k blocks, k = max(window, 1) or 2
// when that is 1 and the alphabet has several letters;
// west/east colors are the left/right k x (k-1) strips, south/north the
// bottom/top (k-1) x k strips, and d reads the bottom-left cell.
TileCompilation sft_to_wang(const SftSpec& spec);

// Applies d cellwise. Every decode entry must be a single letter.
Window decode_cells(const std::vector<std::string>& decode, const Grid<TileIndex>& cells);

std::map<TileIndex, std::string> indexed(const std::vector<std::string>& values);

enum class Move { kLeft, kRight };

struct TmRule {
  std::size_t next = 0;
  char write = 0;
  Move move = Move::kRight;
  friend bool operator==(const TmRule&, const TmRule&) = default;
};

struct TmSpec {
  std::vector<std::string> state_names;  // index = state id
  std::size_t start = 0;
  char blank = '_';
  std::vector<char> symbols;  // sorted tape alphabet, includes blank
  std::map<std::pair<std::size_t, char>, TmRule> rules;
  std::vector<bool> halting;

  std::size_t state_count() const { return state_names.size(); }
  // Checks the invariants; throws InvalidInput.
  void validate() const;
};

// tm states=<n> start=<s> blank=<b>
// rule <state> <read> -> <state'> <write> <L|R>
// halt <state>
// State names are arbitrary tokens (at most n distinct); symbols are single
// characters.
TmSpec parse_tm(std::string_view text);

struct TmConfig {
  std::string tape;
  std::size_t head = 0;
  std::size_t state = 0;
  friend bool operator==(const TmConfig&, const TmConfig&) = default;
};

struct TmRun {
  enum class End { kRunning, kHalted, kStuck, kLeftWindow };
  std::vector<TmConfig> configs;  // configs[r] is the configuration at step r
  End end = End::kRunning;
};

// Reference simulator on an n-cell window, at most `steps` steps. Stops at
// a halting state, a missing rule, or a move off the window.
TmRun simulate_tm(const TmSpec& tm, std::string_view input, std::size_t tape_width, std::size_t steps,
                  std::size_t head_position = 0);

struct TmCellColor {
  char symbol = 0;
  std::optional<std::size_t> head_state;
  friend bool operator==(const TmCellColor&, const TmCellColor&) = default;
};

struct TmCompilation {
  TileCompilation compilation;
  std::size_t tape_width = 0;
  // Vertical colors that carry a tape cell; other colors are absent.
  std::map<ColorId, TmCellColor> cell_colors;
  ColorId wall_left = 0;
  ColorId wall_right = 0;
};

// Space-time diagram tiles: row r of an n-wide rectangle holds the
// configuration at step r on its south edges. Side columns must carry the
// wall colors, which admit no head signal.
TmCompilation tm_to_tileset(const TmSpec& tm, std::size_t tape_width);

// Boundary forcing the bottom row to (start state at head_position, input
// padded with blanks) and the side walls. nullopt when the initial row uses
// a cell color no tile carries, so no rectangle of that width tiles.
std::optional<BoundaryConstraint> tm_initial_boundary(const TmCompilation& compiled, const TmSpec& tm,
                                                      std::string_view input, std::size_t height,
                                                      std::size_t head_position = 0);

// Reads the configuration on the south edges of row r; nullopt when the row
// does not hold exactly one head.
std::optional<TmConfig> decode_tm_row(const TmCompilation& compiled, const Tiling& tiling, std::size_t row);

}  // namespace shiftforge
