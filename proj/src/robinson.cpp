#include "shiftforge/robinson.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "robinson_internal.hpp"

namespace shiftforge {

namespace {

using LabelTile = std::array<std::string, 4>;  // N, E, S, W

struct PinnedTile {
  ColorId north, east, south, west;
  const char* role;
};

#include "robinson_table.inc"

RobinsonSet build_from_labels(const std::map<LabelTile, std::string>& tiles, const std::string& name) {
  std::map<std::string, ColorId> color_ids;
  for (const auto& [labels, role] : tiles)
    for (const std::string& l : labels) color_ids.emplace(l, 0);
  std::vector<std::string> color_labels;
  for (auto& [label, id] : color_ids) {
    id = static_cast<ColorId>(color_labels.size());
    color_labels.push_back(label);
  }
  std::vector<std::pair<Tile, std::string>> rows;
  for (const auto& [labels, role] : tiles)
    rows.push_back({Tile{color_ids[labels[0]], color_ids[labels[1]], color_ids[labels[2]], color_ids[labels[3]]}, role});
  std::sort(rows.begin(), rows.end());
  RobinsonSet out;
  std::vector<Tile> plain;
  for (auto& [tile, role] : rows) {
    plain.push_back(tile);
    out.tile_roles.push_back(role);
  }
  const std::size_t color_count = color_labels.size();
  out.tileset = TileSet(name, color_count, std::move(plain), std::move(color_labels));
  return out;
}

}  // namespace

RobinsonSet derive_robinson_tileset(int levels) {
  if (levels < 3 || levels > 20) throw InvalidInput("levels must lie in [3, 20]");
  const long size = (1L << levels) - 1;
  std::map<LabelTile, std::string> tiles;
  for (long y = 1; y <= size; ++y) {
    for (long x = 1; x <= size; ++x) {
      const auto m = robinson_detail::cell_marks(x, y);
      // Shared edges must carry one color seen from both sides.
      if (x < size && m.side_label[1] != robinson_detail::cell_marks(x + 1, y).side_label[3])
        throw std::logic_error("inconsistent vertical edge in the ideal configuration");
      if (y < size && m.side_label[0] != robinson_detail::cell_marks(x, y + 1).side_label[2])
        throw std::logic_error("inconsistent horizontal edge in the ideal configuration");
      tiles.emplace(LabelTile{m.side_label[0], m.side_label[1], m.side_label[2], m.side_label[3]}, m.role);
    }
  }
  return build_from_labels(tiles, kRobinsonVersion);
}

RobinsonSet robinson_tileset() {
  std::vector<Tile> tiles;
  RobinsonSet out;
  for (const PinnedTile& t : kPinnedTiles) {
    tiles.push_back({t.north, t.east, t.south, t.west});
    out.tile_roles.emplace_back(t.role);
  }
  std::vector<std::string> labels(std::begin(kPinnedColors), std::end(kPinnedColors));
  const std::size_t color_count = labels.size();
  out.tileset = TileSet(kRobinsonVersion, color_count, std::move(tiles), std::move(labels));
  return out;
}

Tiling robinson_patch(std::size_t width, std::size_t height) {
  const RobinsonSet set = robinson_tileset();
  std::map<std::string, ColorId> color_ids;
  for (ColorId c = 0; c < set.tileset.color_count(); ++c) color_ids[set.tileset.color_labels()[c]] = c;
  std::map<Tile, TileIndex> index;
  for (TileIndex i = 0; i < set.tileset.size(); ++i) index[set.tileset[i]] = i;

  Grid<TileIndex> cells(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const auto m = robinson_detail::cell_marks(static_cast<long>(x + 1), static_cast<long>(y + 1));
      const Tile t{color_ids.at(m.side_label[0]), color_ids.at(m.side_label[1]), color_ids.at(m.side_label[2]),
                   color_ids.at(m.side_label[3])};
      cells.at(x, y) = index.at(t);
    }
  }
  return Tiling{std::move(cells)};
}

bool EvidenceReport::consistent_with_aperiodicity() const {
  if (budget_exhausted || periodic_tiling_found || largest_square_sat < max_square) return false;
  return std::all_of(tori.begin(), tori.end(), [](const auto& kv) { return kv.second == SolveStatus::kUnsat; });
}

EvidenceReport aperiodicity_evidence(const TileSet& tileset, std::size_t max_square, std::size_t max_period,
                                     const SearchBudget& budget) {
  if (max_square == 0 || max_period == 0) throw InvalidInput("evidence bounds must be at least 1");
  EvidenceReport report;
  report.max_square = max_square;
  report.max_period = max_period;
  bool all_sat = true;
  for (std::size_t n = 1; n <= max_square; ++n) {
    const RectangleResult r = solve_rectangle(tileset, n, n, {}, budget);
    report.nodes += r.stats.nodes;
    report.squares.emplace_back(n, r.status);
    if (r.status == SolveStatus::kUnknown) report.budget_exhausted = true;
    all_sat = all_sat && r.status == SolveStatus::kSat;
    if (all_sat) report.largest_square_sat = n;
  }
  for (std::size_t p = 1; p <= max_period; ++p) {
    for (std::size_t q = 1; q <= max_period; ++q) {
      const TorusResult r = solve_torus(tileset, p, q, budget);
      report.nodes += r.stats.nodes;
      report.tori[{p, q}] = r.status;
      if (r.status == SolveStatus::kUnknown) report.budget_exhausted = true;
      if (r.status == SolveStatus::kSat) report.periodic_tiling_found = true;
    }
  }
  return report;
}

std::string format_evidence(const EvidenceReport& report) {
  std::ostringstream out;
  out << "evidence max_square=" << report.max_square << " max_period=" << report.max_period << '\n';
  out << "largest_square_sat " << report.largest_square_sat << '\n';
  for (const auto& [n, status] : report.squares) out << "square " << n << ' ' << to_string(status) << '\n';
  for (const auto& [pq, status] : report.tori)
    out << "torus " << pq.first << ' ' << pq.second << ' ' << to_string(status) << '\n';
  out << "budget " << (report.budget_exhausted ? "EXHAUSTED" : "OK") << '\n';
  if (report.periodic_tiling_found) out << "verdict NOT_APERIODIC\n";
  else if (report.consistent_with_aperiodicity()) out << "verdict CONSISTENT_WITH_APERIODICITY\n";
  else out << "verdict INCONCLUSIVE\n";
  return out.str();
}

}  // namespace shiftforge
