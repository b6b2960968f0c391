#pragma once

// Macro-tiles: valid n x n blocks of a tile set viewed as single tiles, plus
// homomorphism (simulation) and isomorphism search between tile sets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftforge/core.hpp"
#include "shiftforge/solve.hpp"

namespace shiftforge {

struct MacroTileSet {
  TileSet base;
  std::size_t n = 0;
  // Every valid n x n tiling, in the solver's lexicographic order.
  std::vector<Tiling> blocks;
  // One tile per distinct border 4-tuple; colors are ids of base-color
  // sequences (north/south read west to east, east/west south to north).
  TileSet tileset;
  std::vector<TileIndex> tile_of_block;
  std::vector<std::vector<ColorId>> color_sequences;  // composite color -> base colors
};

struct MacroResult {
  std::optional<MacroTileSet> macro;  // empty when a budget was exceeded
  std::uint64_t blocks_seen = 0;
};

inline constexpr std::uint64_t kDefaultMaxBlocks = 200'000;

MacroResult macro_tiles(const TileSet& tileset, std::size_t n, const SearchBudget& budget = {},
                        std::uint64_t max_blocks = kDefaultMaxBlocks);

// Border colors of a block read off the base tile set.
std::vector<ColorId> block_edge(const TileSet& base, const Tiling& block, char side);

// Sidecar text: one `macro <tile> block <b>` header per block followed by its
// rows, top first.
std::string write_macro_sidecar(const MacroTileSet& macro);
std::string format_macro_summary(const MacroTileSet& macro);

struct TileSetMap {
  SolveStatus status = SolveStatus::kUnknown;  // kSat: assignment holds a map
  std::vector<TileIndex> assignment;           // source tile -> target tile
  std::uint64_t nodes = 0;
};

// Lexicographically least map f with: a beside b (east/west, resp. north/
// south) in the source implies f(a) beside f(b) in the target.
TileSetMap find_simulation(const TileSet& source, const TileSet& target, const SearchBudget& budget = {});

// Bijection with: a beside b in one set iff the images are beside in the
// other, for both directions. Lexicographically least when several exist.
TileSetMap check_isomorphism(const TileSet& a, const TileSet& b, const SearchBudget& budget = {});

bool is_adjacency_preserving(const TileSet& source, const TileSet& target, const std::vector<TileIndex>& map);

std::string format_tileset_map(const char* kind, const TileSetMap& map);

}  // namespace shiftforge
