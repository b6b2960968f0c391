#include "shiftforge/solve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <sstream>
#include <unordered_set>

namespace shiftforge {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSat: return "SAT";
    case SolveStatus::kUnsat: return "UNSAT";
    case SolveStatus::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

using Word = std::uint64_t;
constexpr int kNorth = 0, kEast = 1, kSouth = 2, kWest = 3;
constexpr int opposite(int dir) { return (dir + 2) % 4; }
constexpr std::size_t kNogoodCap = 2'000'000;

ColorId side(const Tile& t, int dir) {
  switch (dir) {
    case kNorth: return t.north;
    case kEast: return t.east;
    case kSouth: return t.south;
    default: return t.west;
  }
}

// Backtracking engine shared by the rectangle and torus searches.
class Engine {
 public:
  enum class Outcome { kContinue, kStop, kAbort };

  Engine(const TileSet& ts, std::size_t w, std::size_t h, bool wrap, const BoundaryConstraint& boundary,
         const SearchBudget& budget)
      : tiles_(ts.size()),
        colors_(ts.color_count()),
        words_((tiles_ + 63) / 64),
        w_(w),
        h_(h),
        n_(w * h),
        budget_(budget),
        start_(std::chrono::steady_clock::now()) {
    for (int d = 0; d < 4; ++d) {
      side_[d].resize(tiles_);
      by_side_[d].assign(colors_ * words_, 0);
      for (std::size_t t = 0; t < tiles_; ++t) {
        const ColorId c = side(ts[t], d);
        side_[d][t] = c;
        by_side_[d][c * words_ + t / 64] |= Word{1} << (t % 64);
      }
    }
    stamp_.assign(colors_, 0);
    support_.assign(words_, 0);

    neighbor_.assign(n_, {-1, -1, -1, -1});
    for (std::size_t y = 0; y < h_; ++y) {
      for (std::size_t x = 0; x < w_; ++x) {
        auto& nb = neighbor_[y * w_ + x];
        if (y + 1 < h_ || wrap) nb[kNorth] = static_cast<long>(((y + 1) % h_) * w_ + x);
        if (x + 1 < w_ || wrap) nb[kEast] = static_cast<long>(y * w_ + (x + 1) % w_);
        if (y > 0 || wrap) nb[kSouth] = static_cast<long>(((y + h_ - 1) % h_) * w_ + x);
        if (x > 0 || wrap) nb[kWest] = static_cast<long>(y * w_ + (x + w_ - 1) % w_);
      }
    }

    cut_.resize(n_ + 1);
    for (std::size_t m = 0; m <= n_; ++m) {
      for (std::size_t a = 0; a < m; ++a)
        for (int d = 0; d < 4; ++d)
          if (neighbor_[a][d] >= static_cast<long>(m)) cut_[m].push_back({a, d});
    }

    domains_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t t = 0; t < tiles_; ++t) domains_[i * words_ + t / 64] |= Word{1} << (t % 64);
    saved_.assign(n_ + 1, {});
    in_queue_.assign(n_, 0);

    consistent_ = tiles_ > 0 && apply_boundary(boundary, wrap);
    if (consistent_) {
      for (std::size_t i = 0; i < n_; ++i) enqueue(i);
      consistent_ = propagate();
    }
  }

  Outcome run(const std::function<bool(const std::vector<TileIndex>&)>& on_solution) {
    if (!consistent_) return Outcome::kContinue;
    on_solution_ = &on_solution;
    return dfs(0);
  }

  const SearchStats& stats() const { return stats_; }

 private:
  Word* dom(std::size_t cell) { return domains_.data() + cell * words_; }

  bool restrict_to(std::size_t cell, const Word* mask) {
    Word any = 0;
    Word* d = dom(cell);
    for (std::size_t k = 0; k < words_; ++k) any |= (d[k] &= mask[k]);
    return any != 0;
  }

  bool restrict_side(std::size_t cell, int dir, ColorId color) {
    if (color >= colors_) {
      std::fill(dom(cell), dom(cell) + words_, 0);
      return false;
    }
    return restrict_to(cell, &by_side_[dir][color * words_]);
  }

  bool apply_boundary(const BoundaryConstraint& b, bool wrap) {
    if (wrap) return true;
    auto check_len = [](const std::optional<std::vector<ColorId>>& v, std::size_t len) {
      if (v && v->size() != len) throw InvalidInput("boundary color sequence has the wrong length");
    };
    check_len(b.north, w_);
    check_len(b.south, w_);
    check_len(b.west, h_);
    check_len(b.east, h_);
    bool ok = true;
    for (std::size_t x = 0; x < w_; ++x) {
      if (b.south) ok &= restrict_side(x, kSouth, (*b.south)[x]);
      if (b.north) ok &= restrict_side((h_ - 1) * w_ + x, kNorth, (*b.north)[x]);
    }
    for (std::size_t y = 0; y < h_; ++y) {
      if (b.west) ok &= restrict_side(y * w_, kWest, (*b.west)[y]);
      if (b.east) ok &= restrict_side(y * w_ + w_ - 1, kEast, (*b.east)[y]);
    }
    for (const auto& [pos, tile] : b.forced) {
      if (pos.first >= w_ || pos.second >= h_) throw InvalidInput("forced cell lies outside the rectangle");
      std::vector<Word> single(words_, 0);
      if (tile < tiles_) single[tile / 64] = Word{1} << (tile % 64);
      ok &= restrict_to(pos.second * w_ + pos.first, single.data());
    }
    return ok;
  }

  void enqueue(std::size_t cell) {
    if (!in_queue_[cell]) {
      in_queue_[cell] = 1;
      queue_.push_back(cell);
    }
  }

  // AC-3 over the matching constraints, starting from the queued cells.
  bool propagate() {
    std::size_t head = 0;
    bool ok = true;
    while (head < queue_.size()) {
      const std::size_t cell = queue_[head++];
      in_queue_[cell] = 0;
      if (!ok) continue;
      for (int d = 0; d < 4 && ok; ++d) {
        const long nb = neighbor_[cell][d];
        if (nb < 0) continue;
        // Support: union of tiles whose opposite side shows a color present
        // on side d of some tile still allowed at cell.
        ++stamp_id_;
        std::fill(support_.begin(), support_.end(), 0);
        const Word* src = dom(cell);
        const int opp = opposite(d);
        for (std::size_t k = 0; k < words_; ++k) {
          Word bits = src[k];
          while (bits) {
            const std::size_t t = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            const ColorId c = side_[d][t];
            if (stamp_[c] == stamp_id_) continue;
            stamp_[c] = stamp_id_;
            const Word* m = &by_side_[opp][c * words_];
            for (std::size_t j = 0; j < words_; ++j) support_[j] |= m[j];
          }
        }
        Word* dst = dom(static_cast<std::size_t>(nb));
        bool changed = false;
        Word any = 0;
        for (std::size_t j = 0; j < words_; ++j) {
          const Word next = dst[j] & support_[j];
          changed |= next != dst[j];
          dst[j] = next;
          any |= next;
        }
        if (any == 0) ok = false;
        else if (changed) enqueue(static_cast<std::size_t>(nb));
      }
    }
    queue_.clear();
    return ok;
  }

  TileIndex single_tile(std::size_t cell) {
    const Word* d = dom(cell);
    for (std::size_t k = 0; k < words_; ++k)
      if (d[k]) return static_cast<TileIndex>(k * 64 + static_cast<std::size_t>(std::countr_zero(d[k])));
    return 0;
  }

  // Colors on every edge between an assigned and an unassigned cell. The
  // rest of the search depends on the assigned prefix only through these.
  std::string cut_key(std::size_t m) {
    std::string key;
    key.reserve(4 * (cut_[m].size() + 1));
    auto put = [&key](std::uint32_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
    put(static_cast<std::uint32_t>(m));
    for (const auto& [cell, d] : cut_[m]) put(side_[d][single_tile(cell)]);
    return key;
  }

  bool out_of_budget() {
    if (stats_.nodes > budget_.max_nodes) return true;
    if ((stats_.nodes & 1023) == 0) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      if (std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() >
          static_cast<long long>(budget_.max_millis)) {
        timed_out_ = true;
      }
    }
    return timed_out_;
  }

  Outcome dfs(std::size_t m) {
    if (m == n_) {
      std::vector<TileIndex> cells(n_);
      for (std::size_t i = 0; i < n_; ++i) cells[i] = single_tile(i);
      ++solutions_;
      return (*on_solution_)(cells) ? Outcome::kContinue : Outcome::kStop;
    }
    std::string key;
    if (m > 0) {
      key = cut_key(m);
      if (nogoods_.count(key)) {
        ++stats_.nogood_hits;
        return Outcome::kContinue;
      }
    }
    const std::uint64_t before = solutions_;
    saved_[m].assign(domains_.begin(), domains_.end());
    const std::vector<Word> choices(dom(m), dom(m) + words_);
    for (std::size_t k = 0; k < words_; ++k) {
      Word bits = choices[k];
      while (bits) {
        const std::size_t t = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        ++stats_.nodes;
        if (out_of_budget()) return Outcome::kAbort;
        Word* d = dom(m);
        std::fill(d, d + words_, 0);
        d[t / 64] = Word{1} << (t % 64);
        enqueue(m);
        if (propagate()) {
          const Outcome r = dfs(m + 1);
          if (r != Outcome::kContinue) return r;
        }
        std::copy(saved_[m].begin(), saved_[m].end(), domains_.begin());
      }
    }
    if (m > 0 && solutions_ == before && nogoods_.size() < kNogoodCap) nogoods_.insert(std::move(key));
    return Outcome::kContinue;
  }

  std::size_t tiles_;
  std::size_t colors_;
  std::size_t words_;
  std::size_t w_, h_, n_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  bool timed_out_ = false;
  bool consistent_ = false;

  std::array<std::vector<ColorId>, 4> side_;
  std::array<std::vector<Word>, 4> by_side_;
  std::vector<std::array<long, 4>> neighbor_;
  std::vector<std::vector<std::pair<std::size_t, int>>> cut_;

  std::vector<Word> domains_;
  std::vector<std::vector<Word>> saved_;
  std::vector<std::size_t> queue_;
  std::vector<char> in_queue_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t stamp_id_ = 0;
  std::vector<Word> support_;

  std::unordered_set<std::string> nogoods_;
  std::uint64_t solutions_ = 0;
  SearchStats stats_;
  const std::function<bool(const std::vector<TileIndex>&)>* on_solution_ = nullptr;
};

void require_dims(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw InvalidInput("grid dimensions must be positive");
}

}  // namespace

RectangleResult solve_rectangle(const TileSet& tileset, std::size_t width, std::size_t height,
                                const BoundaryConstraint& boundary, const SearchBudget& budget) {
  require_dims(width, height);
  Engine engine(tileset, width, height, false, boundary, budget);
  RectangleResult result;
  const auto outcome = engine.run([&](const std::vector<TileIndex>& cells) {
    result.tiling = Tiling{Grid<TileIndex>(width, height, cells)};
    return false;
  });
  result.stats = engine.stats();
  result.status = result.tiling ? SolveStatus::kSat
                  : outcome == Engine::Outcome::kAbort ? SolveStatus::kUnknown
                                                       : SolveStatus::kUnsat;
  return result;
}

EnumerationStatus enumerate_rectangle(const TileSet& tileset, std::size_t width, std::size_t height,
                                      const BoundaryConstraint& boundary, const SearchBudget& budget,
                                      const std::function<bool(const Tiling&)>& visit) {
  require_dims(width, height);
  Engine engine(tileset, width, height, false, boundary, budget);
  const auto outcome = engine.run([&](const std::vector<TileIndex>& cells) {
    return visit(Tiling{Grid<TileIndex>(width, height, cells)});
  });
  switch (outcome) {
    case Engine::Outcome::kStop: return EnumerationStatus::kStopped;
    case Engine::Outcome::kAbort: return EnumerationStatus::kBudgetExhausted;
    default: return EnumerationStatus::kComplete;
  }
}

CountResult count_rectangle(const TileSet& tileset, std::size_t width, std::size_t height,
                            const BoundaryConstraint& boundary, const SearchBudget& budget) {
  require_dims(width, height);
  Engine engine(tileset, width, height, false, boundary, budget);
  std::uint64_t count = 0;
  const auto outcome = engine.run([&](const std::vector<TileIndex>&) {
    ++count;
    return true;
  });
  CountResult result;
  result.stats = engine.stats();
  if (outcome != Engine::Outcome::kAbort) result.count = count;
  return result;
}

TorusResult solve_torus(const TileSet& tileset, std::size_t p, std::size_t q, const SearchBudget& budget) {
  require_dims(p, q);
  Engine engine(tileset, p, q, true, {}, budget);
  TorusResult result;
  const auto outcome = engine.run([&](const std::vector<TileIndex>& cells) {
    result.tiling = TorusTiling{Grid<TileIndex>(p, q, cells)};
    return false;
  });
  result.stats = engine.stats();
  result.status = result.tiling ? SolveStatus::kSat
                  : outcome == Engine::Outcome::kAbort ? SolveStatus::kUnknown
                                                       : SolveStatus::kUnsat;
  return result;
}

EnumerationStatus enumerate_torus(const TileSet& tileset, std::size_t p, std::size_t q, const SearchBudget& budget,
                                  const std::function<bool(const TorusTiling&)>& visit) {
  require_dims(p, q);
  Engine engine(tileset, p, q, true, {}, budget);
  const auto outcome = engine.run([&](const std::vector<TileIndex>& cells) {
    return visit(TorusTiling{Grid<TileIndex>(p, q, cells)});
  });
  switch (outcome) {
    case Engine::Outcome::kStop: return EnumerationStatus::kStopped;
    case Engine::Outcome::kAbort: return EnumerationStatus::kBudgetExhausted;
    default: return EnumerationStatus::kComplete;
  }
}

CountResult count_torus(const TileSet& tileset, std::size_t p, std::size_t q, const SearchBudget& budget) {
  require_dims(p, q);
  Engine engine(tileset, p, q, true, {}, budget);
  std::uint64_t count = 0;
  const auto outcome = engine.run([&](const std::vector<TileIndex>&) {
    ++count;
    return true;
  });
  CountResult result;
  result.stats = engine.stats();
  if (outcome != Engine::Outcome::kAbort) result.count = count;
  return result;
}

DominoVerdict domino_semidecide(const TileSet& tileset, std::size_t max_n, const SearchBudget& budget) {
  if (max_n == 0) throw InvalidInput("max_n must be at least 1");
  DominoVerdict v;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const RectangleResult square = solve_rectangle(tileset, n, n, {}, budget);
    v.nodes += square.stats.nodes;
    v.log.push_back("rect " + std::to_string(n) + "x" + std::to_string(n) + " " + to_string(square.status));
    if (square.status == SolveStatus::kUnsat) {
      v.kind = DominoVerdict::Kind::kNoTiling;
      v.n = n;
      return v;
    }
    if (square.status == SolveStatus::kUnknown) {
      v.budget_exhausted = true;
      return v;
    }
    std::vector<std::pair<std::size_t, std::size_t>> periods;
    for (std::size_t k = 1; k < n; ++k) periods.emplace_back(k, n);
    for (std::size_t k = 1; k <= n; ++k) periods.emplace_back(n, k);
    for (const auto& [p, q] : periods) {
      TorusResult torus = solve_torus(tileset, p, q, budget);
      v.nodes += torus.stats.nodes;
      v.log.push_back("torus " + std::to_string(p) + "x" + std::to_string(q) + " " + to_string(torus.status));
      if (torus.status == SolveStatus::kSat) {
        v.kind = DominoVerdict::Kind::kTilesPeriodically;
        v.p = p;
        v.q = q;
        v.witness = std::move(torus.tiling);
        return v;
      }
      if (torus.status == SolveStatus::kUnknown) {
        v.budget_exhausted = true;
        return v;
      }
    }
    v.completed_n = n;
  }
  return v;
}

namespace {

void append_rows(std::ostringstream& out, const Grid<TileIndex>& g) {
  for (std::size_t r = 0; r < g.height(); ++r) {
    const std::size_t y = g.height() - 1 - r;
    for (std::size_t x = 0; x < g.width(); ++x) out << (x ? " " : "") << g.at(x, y);
    out << '\n';
  }
}

}  // namespace

std::string format_rectangle_result(const RectangleResult& result) {
  std::ostringstream out;
  out << to_string(result.status) << '\n';
  if (result.tiling) append_rows(out, result.tiling->cells);
  return out.str();
}

std::string format_torus_result(const TorusResult& result) {
  std::ostringstream out;
  out << to_string(result.status) << '\n';
  if (result.tiling) append_rows(out, result.tiling->cells);
  return out.str();
}

std::string format_domino_verdict(const DominoVerdict& verdict) {
  std::ostringstream out;
  switch (verdict.kind) {
    case DominoVerdict::Kind::kTilesPeriodically:
      out << "TILES_PERIODICALLY " << verdict.p << ' ' << verdict.q << '\n';
      if (verdict.witness) append_rows(out, verdict.witness->cells);
      break;
    case DominoVerdict::Kind::kNoTiling:
      out << "NO_TILING " << verdict.n << '\n';
      break;
    case DominoVerdict::Kind::kUndetermined:
      out << "UNDETERMINED completed_n=" << verdict.completed_n
          << (verdict.budget_exhausted ? " budget_exhausted" : "") << '\n';
      break;
  }
  for (const std::string& line : verdict.log) out << "# " << line << '\n';
  return out.str();
}

}  // namespace shiftforge
