#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shiftforge/solve.hpp"

using namespace shiftforge;

namespace {

const TileSet kOne("one", 1, {{0, 0, 0, 0}});
const TileSet kMismatch("mismatch", 3, {{0, 1, 0, 2}});

TileSet from(const std::vector<Tile>& tiles) { return make_tileset("random", tiles); }

}  // namespace

TEST_CASE("rectangle examples") {
  const RectangleResult r = solve_rectangle(kOne, 5, 5);
  CHECK(r.status == SolveStatus::kSat);
  REQUIRE(r.tiling);
  for (TileIndex i : r.tiling->cells.cells()) CHECK(i == 0);

  CHECK(solve_rectangle(kMismatch, 2, 1).status == SolveStatus::kUnsat);
  CHECK(solve_rectangle(kMismatch, 1, 3).status == SolveStatus::kSat);
  CHECK_THROWS_AS(solve_rectangle(kOne, 0, 2), InvalidInput);
}

TEST_CASE("count examples") {
  CHECK(count_rectangle(kOne, 2, 2).count == 1u);
  const TileSet two("two", 2, {{0, 0, 0, 0}, {0, 0, 1, 0}});
  const TileSet blank2("blank2", 1, std::vector<Tile>{{0, 0, 0, 0}});
  CHECK(count_rectangle(blank2, 3, 1).count == 1u);
  // Distinct tiles cannot all pair freely in both directions, but in a single
  // column only north/south matter: 2^4 stackings.
  const TileSet free2("free2", 2, {{0, 0, 0, 0}, {0, 1, 0, 1}});
  CHECK(count_rectangle(free2, 1, 4).count == 16u);
  CHECK(count_rectangle(two, 1, 1).count == 2u);
}

TEST_CASE("solver agrees with naive enumeration") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const auto raw = oracle::random_tiles(rng, 4, 3);
    const TileSet ts = from(raw);
    for (std::size_t w = 1; w <= 3; ++w)
      for (std::size_t h = 1; h <= 3; ++h) {
        if (w * h > 6) continue;
        CHECK(count_rectangle(ts, w, h).count == oracle::naive_count(ts.tiles(), w, h, false));
        CHECK(count_torus(ts, w, h).count == oracle::naive_count(ts.tiles(), w, h, true));
        const auto least = oracle::naive_least(ts.tiles(), w, h, false);
        const RectangleResult r = solve_rectangle(ts, w, h);
        CHECK((r.status == SolveStatus::kSat) == least.has_value());
        if (least) CHECK(r.tiling->cells.cells() == *least);
        const auto least_torus = oracle::naive_least(ts.tiles(), w, h, true);
        const TorusResult t = solve_torus(ts, w, h);
        CHECK((t.status == SolveStatus::kSat) == least_torus.has_value());
        if (least_torus) CHECK(t.tiling->cells.cells() == *least_torus);
      }
  }
}

TEST_CASE("enumeration is lexicographic and complete") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const TileSet ts = from(oracle::random_tiles(rng, 4, 2));
    std::vector<std::vector<TileIndex>> seen;
    enumerate_rectangle(ts, 2, 2, {}, {}, [&](const Tiling& t) {
      CHECK(validate_tiling(ts, t));
      seen.push_back(t.cells.cells());
      return true;
    });
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(seen.size() == oracle::naive_count(ts.tiles(), 2, 2, false));
  }
}

TEST_CASE("visitor can stop enumeration") {
  const TileSet free2("free2", 2, {{0, 0, 0, 0}, {0, 1, 0, 1}});
  int n = 0;
  const auto status = enumerate_rectangle(free2, 2, 2, {}, {}, [&](const Tiling&) { return ++n < 3; });
  CHECK(status == EnumerationStatus::kStopped);
  CHECK(n == 3);
}

TEST_CASE("boundary constraints") {
  // Tiles carry their south color upward; forcing the south edge fixes columns.
  const TileSet ts("cols", 2, {{0, 0, 0, 0}, {1, 0, 1, 0}});
  BoundaryConstraint b;
  b.south = std::vector<ColorId>{1, 0, 1};
  const RectangleResult r = solve_rectangle(ts, 3, 2, b);
  REQUIRE(r.tiling);
  CHECK(r.tiling->cells.cells() == std::vector<TileIndex>{1, 0, 1, 1, 0, 1});
  CHECK(count_rectangle(ts, 3, 2, b).count == 1u);

  BoundaryConstraint forced;
  forced.forced[{1, 1}] = 1;
  CHECK(count_rectangle(ts, 3, 2, forced).count == 4u);

  BoundaryConstraint bad;
  bad.north = std::vector<ColorId>{0};
  CHECK_THROWS_AS(solve_rectangle(ts, 3, 2, bad), InvalidInput);

  BoundaryConstraint wall;
  wall.west = std::vector<ColorId>{1, 1};
  CHECK(solve_rectangle(ts, 3, 2, wall).status == SolveStatus::kUnsat);
}

TEST_CASE("budgets give UNKNOWN, never a wrong verdict") {
  const TileSet free2("free2", 2, {{0, 0, 0, 1}, {0, 1, 0, 0}});
  const CountResult c = count_rectangle(free2, 4, 4, {}, SearchBudget{3, 1000});
  CHECK_FALSE(c.count);
  const RectangleResult r = solve_rectangle(kMismatch, 30, 30, {}, SearchBudget{1, 1000});
  CHECK(r.status != SolveStatus::kSat);
}

TEST_CASE("domino sweep examples") {
  const DominoVerdict one = domino_semidecide(kOne, 3);
  CHECK(one.kind == DominoVerdict::Kind::kTilesPeriodically);
  CHECK(one.p == 1);
  CHECK(one.q == 1);
  REQUIRE(one.witness);

  const DominoVerdict bad = domino_semidecide(kMismatch, 5);
  CHECK(bad.kind == DominoVerdict::Kind::kNoTiling);
  CHECK(bad.n == 2);
  CHECK(bad.log == std::vector<std::string>{"rect 1x1 SAT", "torus 1x1 UNSAT", "rect 2x2 UNSAT"});

  // A 2-periodic checkerboard is found at (2, 2) after the (1, 2) and (2, 1) tori fail.
  const TileSet checker("checker", 2, {{0, 0, 1, 1}, {1, 1, 0, 0}});
  const DominoVerdict c = domino_semidecide(checker, 4);
  CHECK(c.kind == DominoVerdict::Kind::kTilesPeriodically);
  CHECK(c.p == 2);
  CHECK(c.q == 2);
  CHECK(validate_torus(checker, *c.witness));
}

TEST_CASE("monotone UNSAT on squares") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const TileSet ts = from(oracle::random_tiles(rng, 4, 3));
    bool unsat = false;
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto s = solve_rectangle(ts, n, n).status;
      if (unsat) CHECK(s == SolveStatus::kUnsat);
      unsat = s == SolveStatus::kUnsat;
    }
  }
}

TEST_CASE("results are deterministic and formatted top row first") {
  const TileSet ts("cols", 2, {{0, 0, 0, 0}, {1, 0, 1, 0}});
  BoundaryConstraint b;
  b.north = std::vector<ColorId>{1, 0};
  const RectangleResult a = solve_rectangle(ts, 2, 2, b), c = solve_rectangle(ts, 2, 2, b);
  CHECK(a.tiling == c.tiling);
  CHECK(a.stats.nodes == c.stats.nodes);
  CHECK(format_rectangle_result(a) == "SAT\n1 0\n1 0\n");
  CHECK(format_torus_result(solve_torus(kMismatch, 1, 1)) == "UNSAT\n");
}
