#pragma once

// Exact tiling search: rectangles, tori and the domino-problem sweep.
//
// All searches assign cells in row-major order (bottom row first, x
// ascending) and try tile indices in ascending order, running arc
// consistency on the four-neighbour matching constraint after every
// assignment. The first solution found is therefore the lexicographically
// least one in that cell order.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftforge/core.hpp"

namespace shiftforge {

// Optional colors forced onto the outer edges of a rectangle, plus forced
// tiles. north/south run west to east (length w); west/east run south to
// north (length h).
struct BoundaryConstraint {
  std::optional<std::vector<ColorId>> north;
  std::optional<std::vector<ColorId>> south;
  std::optional<std::vector<ColorId>> west;
  std::optional<std::vector<ColorId>> east;
  std::map<std::pair<std::size_t, std::size_t>, TileIndex> forced;  // (x, y) -> tile
};

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::uint64_t max_millis = 600'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t nogood_hits = 0;
};

enum class SolveStatus { kSat, kUnsat, kUnknown };

std::string to_string(SolveStatus status);

struct RectangleResult {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<Tiling> tiling;
  SearchStats stats;
};

struct TorusResult {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<TorusTiling> tiling;
  SearchStats stats;
};

// count is empty when the budget ran out before the search completed.
struct CountResult {
  std::optional<std::uint64_t> count;
  SearchStats stats;
};

enum class EnumerationStatus { kComplete, kStopped, kBudgetExhausted };

RectangleResult solve_rectangle(const TileSet& tileset, std::size_t width, std::size_t height,
                                const BoundaryConstraint& boundary = {}, const SearchBudget& budget = {});

CountResult count_rectangle(const TileSet& tileset, std::size_t width, std::size_t height,
                            const BoundaryConstraint& boundary = {}, const SearchBudget& budget = {});

// Visits every valid tiling in lexicographic order; the visitor returns false
// to stop early.
EnumerationStatus enumerate_rectangle(const TileSet& tileset, std::size_t width, std::size_t height,
                                      const BoundaryConstraint& boundary, const SearchBudget& budget,
                                      const std::function<bool(const Tiling&)>& visit);

TorusResult solve_torus(const TileSet& tileset, std::size_t p, std::size_t q, const SearchBudget& budget = {});

CountResult count_torus(const TileSet& tileset, std::size_t p, std::size_t q, const SearchBudget& budget = {});

EnumerationStatus enumerate_torus(const TileSet& tileset, std::size_t p, std::size_t q, const SearchBudget& budget,
                                  const std::function<bool(const TorusTiling&)>& visit);

// Domino-problem semidecision. For n = 1, 2, ..., max_n: solve the n x n
// square (UNSAT -> NoTiling(n)), then every torus (p, q) with max(p, q) = n
// in lexicographic (p, q) order (SAT -> TilesPeriodically(p, q)).
struct DominoVerdict {
  enum class Kind { kTilesPeriodically, kNoTiling, kUndetermined };
  Kind kind = Kind::kUndetermined;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t n = 0;               // square size that failed, for kNoTiling
  std::size_t completed_n = 0;     // largest n whose whole sweep finished
  bool budget_exhausted = false;   // a sub-search ran out of budget
  std::uint64_t nodes = 0;
  std::optional<TorusTiling> witness;
  std::vector<std::string> log;    // one line per sub-search, in order
};

DominoVerdict domino_semidecide(const TileSet& tileset, std::size_t max_n, const SearchBudget& budget = {});

// Text forms: a verdict line, then for SAT the rows top first.
std::string format_rectangle_result(const RectangleResult& result);
std::string format_torus_result(const TorusResult& result);
std::string format_domino_verdict(const DominoVerdict& verdict);

}  // namespace shiftforge
