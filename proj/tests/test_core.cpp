#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shiftforge/core.hpp"

using namespace shiftforge;

TEST_CASE("validate_tiling on trivial sets") {
  const TileSet one("one", 1, {{0, 0, 0, 0}});
  CHECK(validate_tiling(one, Tiling{Grid<TileIndex>(3, 3, 0)}));

  const TileSet two("two", 3, {{0, 1, 0, 0}, {0, 2, 0, 0}});
  CHECK_FALSE(validate_tiling(two, Tiling{Grid<TileIndex>(2, 1, 0)}));
}

TEST_CASE("validate_tiling rejects out-of-range indices") {
  const TileSet one("one", 1, {{0, 0, 0, 0}});
  CHECK_THROWS_AS(validate_tiling(one, Tiling{Grid<TileIndex>(2, 2, 1)}), InvalidInput);
  CHECK_THROWS_AS(validate_torus(one, TorusTiling{Grid<TileIndex>(1, 1, 7)}), InvalidInput);
}

TEST_CASE("torus validation wraps both ways") {
  // east 1 / west 0: a single column of these is fine, a 1-wide torus is not.
  const TileSet ts("t", 2, {{0, 1, 0, 0}});
  CHECK(validate_tiling(ts, Tiling{Grid<TileIndex>(1, 3, 0)}));
  CHECK_FALSE(validate_torus(ts, TorusTiling{Grid<TileIndex>(1, 3, 0)}));
}

TEST_CASE("one bad pair flips a valid tiling") {
  const TileSet ts("checker", 2, {{0, 0, 1, 1}, {1, 1, 0, 0}});
  Grid<TileIndex> g(4, 4);
  for (std::size_t y = 0; y < 4; ++y)
    for (std::size_t x = 0; x < 4; ++x) g.at(x, y) = static_cast<TileIndex>((x + y) % 2);
  REQUIRE(validate_tiling(ts, Tiling{g}));
  REQUIRE(validate_torus(ts, TorusTiling{g}));
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    Grid<TileIndex> h = g;
    h.cells()[i] ^= 1;
    CHECK_FALSE(validate_tiling(ts, Tiling{h}));
  }
}

TEST_CASE("TileSet invariants") {
  CHECK_THROWS_AS(TileSet("dup", 1, {{0, 0, 0, 0}, {0, 0, 0, 0}}), InvalidInput);
  CHECK_THROWS_AS(TileSet("range", 2, {{0, 2, 0, 0}}), InvalidInput);
  CHECK_THROWS_AS(TileSet("labels", 2, {{0, 1, 0, 1}}, {"a"}), InvalidInput);
  const TileSet ok("ok", 2, {{0, 1, 0, 1}}, {"a", "b"});
  CHECK(ok.color_label(1) == "b");
}

TEST_CASE("normalize examples") {
  const TileSet five("five", 6, {{5, 5, 5, 5}});
  const TileSet n = normalize_tileset(five);
  CHECK(n.color_count() == 1);
  REQUIRE(n.size() == 1);
  CHECK(n[0] == Tile{0, 0, 0, 0});

  const Normalized d = normalize_tiles("dup", {{3, 1, 3, 1}, {3, 1, 3, 1}, {1, 1, 1, 1}});
  CHECK(d.tileset.size() == 2);
  CHECK(d.index_map[0] == d.index_map[1]);
  CHECK(d.tileset.tiles() == std::vector<Tile>{{0, 0, 0, 0}, {1, 0, 1, 0}});

  CHECK(make_tileset("m", {{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}}).tiles() ==
        std::vector<Tile>{{1, 0, 0, 0}, {0, 0, 0, 0}});
}

TEST_CASE("normalize is idempotent and preserves the tiling language") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto raw = oracle::random_tiles(rng, 4, 7);
    const TileSet ts = make_tileset("r", raw);
    const Normalized n = normalize_with_map(ts);
    CHECK(normalize_tileset(n.tileset) == n.tileset);
    for (std::size_t i = 0; i + 1 < n.tileset.size(); ++i) CHECK(n.tileset[i] < n.tileset[i + 1]);

    // Every 2x2 grid over the original validates iff its image does.
    oracle::for_each_assignment(ts.size(), 4, [&](const std::vector<TileIndex>& a) {
      Grid<TileIndex> g(2, 2, a), img(2, 2);
      for (std::size_t c = 0; c < 4; ++c) img.cells()[c] = n.index_map[a[c]];
      CHECK(validate_tiling(ts, Tiling{g}) == validate_tiling(n.tileset, Tiling{img}));
      CHECK(validate_torus(ts, TorusTiling{g}) == validate_torus(n.tileset, TorusTiling{img}));
    });
  }
}

TEST_CASE("patterns, alphabets and SFT specs") {
  const Pattern p = pattern_from_rows({"ab", "cd"});
  CHECK(p.at(0, 0) == 'c');
  CHECK(p.at(1, 1) == 'b');
  CHECK(rows_top_first(p) == std::vector<std::string>{"ab", "cd"});
  CHECK_THROWS_AS(pattern_from_rows({"ab", "c"}), InvalidInput);

  const Alphabet a({'b', 'a', 'b'});
  CHECK(a.size() == 2);
  CHECK(a.index_of('b') == 1);
  CHECK_THROWS_AS(a.index_of('z'), InvalidInput);

  const SftSpec spec(a, {pattern_from_rows({"ab"}), pattern_from_rows({"a", "b", "a"})});
  CHECK(spec.window() == 3);
  CHECK(SftSpec(a, {}).window() == 0);
  CHECK_THROWS_AS(SftSpec(Alphabet(std::vector<Letter>{}), {}), InvalidInput);
  CHECK_THROWS_AS(SftSpec(a, {pattern_from_rows({"z"})}), InvalidInput);
}
