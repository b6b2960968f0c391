#include "shiftforge/macrotile.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace shiftforge {

std::vector<ColorId> block_edge(const TileSet& base, const Tiling& block, char side) {
  std::vector<ColorId> seq;
  const std::size_t w = block.width(), h = block.height();
  switch (side) {
    case 'N':
      for (std::size_t x = 0; x < w; ++x) seq.push_back(base[block.cells.at(x, h - 1)].north);
      break;
    case 'S':
      for (std::size_t x = 0; x < w; ++x) seq.push_back(base[block.cells.at(x, 0)].south);
      break;
    case 'E':
      for (std::size_t y = 0; y < h; ++y) seq.push_back(base[block.cells.at(w - 1, y)].east);
      break;
    case 'W':
      for (std::size_t y = 0; y < h; ++y) seq.push_back(base[block.cells.at(0, y)].west);
      break;
    default:
      throw InvalidInput(std::string("unknown side '") + side + "'");
  }
  return seq;
}

MacroResult macro_tiles(const TileSet& tileset, std::size_t n, const SearchBudget& budget, std::uint64_t max_blocks) {
  if (n == 0) throw InvalidInput("macro-tile size must be positive");
  MacroResult result;
  MacroTileSet m;
  m.base = tileset;
  m.n = n;
  bool overflow = false;
  const auto status = enumerate_rectangle(tileset, n, n, {}, budget, [&](const Tiling& t) {
    if (++result.blocks_seen > max_blocks) {
      overflow = true;
      return false;
    }
    m.blocks.push_back(t);
    return true;
  });
  if (overflow || status == EnumerationStatus::kBudgetExhausted) return result;

  // Composite colors: (axis, sequence) keys, horizontal edges first.
  using Key = std::pair<int, std::vector<ColorId>>;
  std::set<Key> keys;
  std::vector<std::array<Key, 4>> borders;
  for (const Tiling& b : m.blocks) {
    std::array<Key, 4> k{Key{0, block_edge(tileset, b, 'N')}, Key{1, block_edge(tileset, b, 'E')},
                         Key{0, block_edge(tileset, b, 'S')}, Key{1, block_edge(tileset, b, 'W')}};
    for (const Key& key : k) keys.insert(key);
    borders.push_back(std::move(k));
  }
  const std::vector<Key> sorted(keys.begin(), keys.end());
  auto id = [&](const Key& k) {
    return static_cast<ColorId>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin());
  };
  std::vector<std::string> labels;
  for (const Key& k : sorted) {
    std::string label = k.first == 0 ? "h" : "v";
    for (std::size_t i = 0; i < k.second.size(); ++i) label += (i ? "." : ":") + std::to_string(k.second[i]);
    labels.push_back(std::move(label));
    m.color_sequences.push_back(k.second);
  }
  std::vector<Tile> raw;
  for (const auto& k : borders) raw.push_back({id(k[0]), id(k[1]), id(k[2]), id(k[3])});
  std::vector<Tile> tiles = raw;
  std::sort(tiles.begin(), tiles.end());
  tiles.erase(std::unique(tiles.begin(), tiles.end()), tiles.end());
  for (const Tile& t : raw)
    m.tile_of_block.push_back(static_cast<TileIndex>(std::lower_bound(tiles.begin(), tiles.end(), t) - tiles.begin()));
  const std::size_t color_count = labels.size();
  m.tileset = TileSet(tileset.name() + "-macro" + std::to_string(n), color_count, std::move(tiles), std::move(labels));
  result.macro = std::move(m);
  return result;
}

std::string write_macro_sidecar(const MacroTileSet& macro) {
  std::ostringstream out;
  out << "# macro-tiles of size " << macro.n << " over " << macro.base.size() << " base tiles\n";
  for (std::size_t b = 0; b < macro.blocks.size(); ++b) {
    out << "macro " << macro.tile_of_block[b] << " block " << b << '\n';
    const auto& g = macro.blocks[b].cells;
    for (std::size_t r = 0; r < g.height(); ++r) {
      for (std::size_t x = 0; x < g.width(); ++x) out << (x ? " " : "") << g.at(x, g.height() - 1 - r);
      out << '\n';
    }
  }
  return out.str();
}

std::string format_macro_summary(const MacroTileSet& macro) {
  std::ostringstream out;
  out << "MACRO n=" << macro.n << " blocks=" << macro.blocks.size() << " tiles=" << macro.tileset.size()
      << " colors=" << macro.tileset.color_count() << '\n';
  return out.str();
}

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix horizontal(const TileSet& t) {
  Matrix m(t.size(), std::vector<char>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) m[i][j] = t[i].east == t[j].west;
  return m;
}

Matrix vertical(const TileSet& t) {
  Matrix m(t.size(), std::vector<char>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) m[i][j] = t[i].north == t[j].south;
  return m;
}

// Degree profile used to prune isomorphism candidates.
std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, char, char> profile(const Matrix& h, const Matrix& v,
                                                                                 std::size_t i) {
  std::size_t ho = 0, hi = 0, vo = 0, vi = 0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    ho += h[i][j];
    hi += h[j][i];
    vo += v[i][j];
    vi += v[j][i];
  }
  return {ho, hi, vo, vi, h[i][i], v[i][i]};
}

class MapSearch {
 public:
  MapSearch(const TileSet& s, const TileSet& t, bool iso, const SearchBudget& budget)
      : hs_(horizontal(s)), vs_(vertical(s)), ht_(horizontal(t)), vt_(vertical(t)), iso_(iso), budget_(budget),
        start_(std::chrono::steady_clock::now()) {}

  TileSetMap run() {
    const std::size_t ns = hs_.size(), nt = ht_.size();
    TileSetMap out;
    std::vector<std::vector<char>> domains(ns, std::vector<char>(nt, 1));
    for (std::size_t i = 0; i < ns; ++i)
      for (std::size_t d = 0; d < nt; ++d) {
        domains[i][d] = pair_ok(i, d, i, d);
        if (iso_ && profile(hs_, vs_, i) != profile(ht_, vt_, d)) domains[i][d] = 0;
      }
    assignment_.assign(ns, 0);
    const int r = dfs(0, domains);
    out.nodes = nodes_;
    if (r > 0) {
      out.status = SolveStatus::kSat;
      out.assignment = assignment_;
    } else {
      out.status = r == 0 ? SolveStatus::kUnsat : SolveStatus::kUnknown;
    }
    return out;
  }

 private:
  // Source pair (i, j) mapped to target pair (a, b) keeps adjacency.
  bool pair_ok(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
    if (iso_)
      return hs_[i][j] == ht_[a][b] && hs_[j][i] == ht_[b][a] && vs_[i][j] == vt_[a][b] && vs_[j][i] == vt_[b][a];
    return (!hs_[i][j] || ht_[a][b]) && (!hs_[j][i] || ht_[b][a]) && (!vs_[i][j] || vt_[a][b]) &&
           (!vs_[j][i] || vt_[b][a]);
  }

  // 1 found, 0 exhausted, -1 budget.
  int dfs(std::size_t i, const std::vector<std::vector<char>>& domains) {
    if (i == domains.size()) return 1;
    for (std::size_t v = 0; v < domains[i].size(); ++v) {
      if (!domains[i][v]) continue;
      if (++nodes_ > budget_.max_nodes) return -1;
      if ((nodes_ & 1023) == 0 &&
          std::chrono::steady_clock::now() - start_ > std::chrono::milliseconds(budget_.max_millis))
        return -1;
      auto next = domains;
      bool dead = false;
      for (std::size_t j = i + 1; j < next.size() && !dead; ++j) {
        bool any = false;
        for (std::size_t d = 0; d < next[j].size(); ++d) {
          if (!next[j][d]) continue;
          if ((iso_ && d == v) || !pair_ok(i, v, j, d)) next[j][d] = 0;
          else any = true;
        }
        dead = !any;
      }
      if (dead) continue;
      assignment_[i] = static_cast<TileIndex>(v);
      const int r = dfs(i + 1, next);
      if (r != 0) return r;
    }
    return 0;
  }

  Matrix hs_, vs_, ht_, vt_;
  bool iso_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  std::vector<TileIndex> assignment_;
};

}  // namespace

TileSetMap find_simulation(const TileSet& source, const TileSet& target, const SearchBudget& budget) {
  if (source.empty() || target.empty()) throw InvalidInput("simulation needs nonempty tile sets");
  return MapSearch(source, target, false, budget).run();
}

TileSetMap check_isomorphism(const TileSet& a, const TileSet& b, const SearchBudget& budget) {
  if (a.size() != b.size()) return TileSetMap{SolveStatus::kUnsat, {}, 0};
  return MapSearch(a, b, true, budget).run();
}

bool is_adjacency_preserving(const TileSet& source, const TileSet& target, const std::vector<TileIndex>& map) {
  if (map.size() != source.size()) return false;
  for (TileIndex t : map)
    if (t >= target.size()) return false;
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      const Tile &a = target[map[i]], &b = target[map[j]];
      if (source[i].east == source[j].west && a.east != b.west) return false;
      if (source[i].north == source[j].south && a.north != b.south) return false;
    }
  }
  return true;
}

std::string format_tileset_map(const char* kind, const TileSetMap& map) {
  std::ostringstream out;
  if (map.status == SolveStatus::kSat) {
    out << kind << '\n';
    for (std::size_t i = 0; i < map.assignment.size(); ++i) out << i << " -> " << map.assignment[i] << '\n';
  } else {
    out << (map.status == SolveStatus::kUnsat ? "NONE" : "UNKNOWN") << '\n';
  }
  out << "# nodes " << map.nodes << '\n';
  return out.str();
}

}  // namespace shiftforge
