#pragma once

// Robinson-style aperiodic tile set and its desk-scale evidence harness.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shiftforge/core.hpp"
#include "shiftforge/solve.hpp"

namespace shiftforge {

struct RobinsonSet {
  TileSet tileset;
  // One annotation per tile: cross/arm, arrow direction, border lines, parity.
  std::vector<std::string> tile_roles;
};

// Version tag of the pinned tile table.
inline constexpr const char* kRobinsonVersion = "robinson-v1";
inline constexpr std::size_t kRobinsonTileCount = 56;
inline constexpr std::size_t kRobinsonColorCount = 36;

// The pinned, normalized tile set (the table compiled into the library).
RobinsonSet robinson_tileset();

// Re-derives the table from the hierarchical cross/arm geometry by reading
// every tile off the [1, 2^levels - 1]^2 patch of the ideal configuration.
// robinson_tileset() is this derivation frozen at levels = 7.
RobinsonSet derive_robinson_tileset(int levels);

// The ideal configuration restricted to [1, width] x [1, height], as
// indices into robinson_tileset(). It tiles every rectangle.
Tiling robinson_patch(std::size_t width, std::size_t height);

struct EvidenceReport {
  std::size_t max_square = 0;
  std::size_t max_period = 0;
  // Largest n <= max_square such that every square up to n is SAT.
  std::size_t largest_square_sat = 0;
  std::vector<std::pair<std::size_t, SolveStatus>> squares;
  std::map<std::pair<std::size_t, std::size_t>, SolveStatus> tori;
  bool periodic_tiling_found = false;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;

  // Squares all SAT up to max_square and every torus UNSAT.
  bool consistent_with_aperiodicity() const;
};

EvidenceReport aperiodicity_evidence(const TileSet& tileset, std::size_t max_square, std::size_t max_period,
                                     const SearchBudget& budget = {});

std::string format_evidence(const EvidenceReport& report);

}  // namespace shiftforge
