#pragma once

// Plain-text forms of the core types. Whitespace-delimited, LF line endings,
// full-line comments start with '#'. Grids are written top row first.
//
//   tileset <name> colors=<n>         sft alphabet=<c1>,<c2>,...
//   tile <north> <east> <south> <west>  forbid <w> <h>
//                                      <h rows of w letters>
//   window <w> <h>                     tiling rect <w> <h>
//   <h rows of w letters>              tiling torus <p> <q>
//                                      <rows of tile indices>
//
// Tile-set files may carry structured comments that survive a round trip:
//   # color <id> <label>     # decode <tile> <letter>     # provenance <tile> <text>

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shiftforge/core.hpp"

namespace shiftforge {

struct TileSetDocument {
  TileSet tileset;
  std::map<TileIndex, std::string> decode;
  std::map<TileIndex, std::string> provenance;
};

TileSetDocument parse_tileset(std::string_view text);

// Writes `tileset`; decode/provenance entries become structured comments.
std::string write_tileset(const TileSet& tileset, const std::map<TileIndex, std::string>& decode = {},
                          const std::map<TileIndex, std::string>& provenance = {});

SftSpec parse_sft(std::string_view text);
std::string write_sft(const SftSpec& spec);

Window parse_window(std::string_view text);
std::string write_window(const Window& window);

using AnyTiling = std::variant<Tiling, TorusTiling>;

AnyTiling parse_tiling(std::string_view text);
std::string write_tiling(const Tiling& tiling);
std::string write_tiling(const TorusTiling& tiling);

// Reads a whole file; throws InvalidInput when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace shiftforge
