#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shiftforge/macrotile.hpp"
#include "shiftforge/robinson.hpp"

using namespace shiftforge;

namespace {

const TileSet kOne("one", 1, {{0, 0, 0, 0}});
const TileSet kMismatch("mismatch", 3, {{0, 1, 0, 2}});

// Independent adjacency-preservation check.
bool preserves(const TileSet& s, const TileSet& t, const std::vector<TileIndex>& f) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[i].east == s[j].west && t[f[i]].east != t[f[j]].west) return false;
      if (s[i].north == s[j].south && t[f[i]].north != t[f[j]].south) return false;
    }
  return true;
}

bool reflects(const TileSet& s, const TileSet& t, const std::vector<TileIndex>& f) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if ((s[i].east == s[j].west) != (t[f[i]].east == t[f[j]].west)) return false;
      if ((s[i].north == s[j].south) != (t[f[i]].north == t[f[j]].south)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("macro-tile counts") {
  const MacroResult one = macro_tiles(kOne, 2);
  REQUIRE(one.macro);
  CHECK(one.macro->blocks.size() == 1);
  CHECK(one.macro->tileset.size() == 1);

  // Column-free tiles: a 2x2 block is two free columns of two.
  const TileSet cols("cols", 2, {{0, 0, 0, 0}, {1, 0, 1, 0}});
  const MacroResult c = macro_tiles(cols, 2);
  REQUIRE(c.macro);
  CHECK(c.macro->blocks.size() == 4);

  const TileSet robinson = robinson_tileset().tileset;
  const MacroResult r = macro_tiles(robinson, 2);
  REQUIRE(r.macro);
  CHECK(r.macro->blocks.size() == count_rectangle(robinson, 2, 2).count.value());
  for (const Tiling& b : r.macro->blocks) CHECK(validate_tiling(robinson, b));
}

TEST_CASE("macro budget") {
  const TileSet robinson = robinson_tileset().tileset;
  const MacroResult r = macro_tiles(robinson, 2, {}, 10);
  CHECK_FALSE(r.macro);
  CHECK(r.blocks_seen == 11);
}

TEST_CASE("macro adjacency equals base adjacency") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const TileSet base = make_tileset("r", oracle::random_tiles(rng, 4, 2));
    const MacroResult r = macro_tiles(base, 2);
    REQUIRE(r.macro);
    const MacroTileSet& m = *r.macro;
    for (std::size_t a = 0; a < m.blocks.size(); ++a)
      for (std::size_t b = 0; b < m.blocks.size(); ++b) {
        const Tile &ta = m.tileset[m.tile_of_block[a]], &tb = m.tileset[m.tile_of_block[b]];
        Grid<TileIndex> wide(4, 2), tall(2, 4);
        for (std::size_t y = 0; y < 2; ++y)
          for (std::size_t x = 0; x < 2; ++x) {
            wide.at(x, y) = m.blocks[a].cells.at(x, y);
            wide.at(x + 2, y) = m.blocks[b].cells.at(x, y);
            tall.at(x, y) = m.blocks[a].cells.at(x, y);
            tall.at(x, y + 2) = m.blocks[b].cells.at(x, y);
          }
        CHECK((ta.east == tb.west) == validate_tiling(base, Tiling{wide}));
        CHECK((ta.north == tb.south) == validate_tiling(base, Tiling{tall}));
      }
  }
}

TEST_CASE("macro of macro at tiny scale") {
  const TileSet cols("cols", 2, {{0, 0, 0, 0}, {1, 0, 1, 0}});
  const MacroResult m1 = macro_tiles(cols, 2);
  REQUIRE(m1.macro);
  const MacroResult m2 = macro_tiles(m1.macro->tileset, 2);
  REQUIRE(m2.macro);
  CHECK(m2.macro->tileset.size() == 16);
  CHECK(write_macro_sidecar(*m1.macro).find("macro 0 block 0") != std::string::npos);
}

TEST_CASE("simulation examples") {
  const TileSet robinson = robinson_tileset().tileset;
  const TileSetMap id = find_simulation(robinson, robinson);
  REQUIRE(id.status == SolveStatus::kSat);
  for (std::size_t i = 0; i < id.assignment.size(); ++i) CHECK(id.assignment[i] == i);

  const TileSet target("t", 4, {{0, 1, 2, 3}, {2, 2, 2, 2}});
  const TileSetMap one = find_simulation(kOne, target);
  REQUIRE(one.status == SolveStatus::kSat);
  CHECK(one.assignment == std::vector<TileIndex>{1});

  // Source pair that sits side by side; target with no horizontal match.
  const TileSet src("s", 2, {{0, 1, 0, 0}, {0, 0, 0, 1}});
  const TileSet dst("d", 6, {{0, 1, 0, 2}, {0, 3, 0, 4}, {5, 5, 5, 5}});
  CHECK(find_simulation(src, TileSet("d2", 5, {{0, 1, 0, 2}, {0, 3, 0, 4}})).status == SolveStatus::kUnsat);
  const TileSetMap m = find_simulation(src, dst);
  REQUIRE(m.status == SolveStatus::kSat);
  CHECK(m.assignment == std::vector<TileIndex>{2, 2});
}

TEST_CASE("simulation search agrees with brute force") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 80; ++trial) {
    const TileSet s = make_tileset("s", oracle::random_tiles(rng, 3, 3));
    const TileSet t = make_tileset("t", oracle::random_tiles(rng, 3, 3));
    std::optional<std::vector<TileIndex>> least;
    oracle::for_each_assignment(t.size(), s.size(), [&](const std::vector<TileIndex>& f) {
      if (preserves(s, t, f) && (!least || f < *least)) least = f;
    });
    const TileSetMap m = find_simulation(s, t);
    CHECK((m.status == SolveStatus::kSat) == least.has_value());
    if (least) {
      CHECK(m.assignment == *least);
      CHECK(is_adjacency_preserving(s, t, m.assignment));
    }
  }
}

TEST_CASE("isomorphism examples") {
  const TileSet robinson = robinson_tileset().tileset;
  const TileSetMap self = check_isomorphism(robinson, robinson);
  REQUIRE(self.status == SolveStatus::kSat);
  for (std::size_t i = 0; i < self.assignment.size(); ++i) CHECK(self.assignment[i] == i);

  // Rename colors by a permutation; tiles stay in the same order.
  const std::size_t n = robinson.color_count();
  std::vector<Tile> renamed;
  for (const Tile& t : robinson.tiles())
    renamed.push_back({static_cast<ColorId>(n - 1 - t.north), static_cast<ColorId>(n - 1 - t.east),
                       static_cast<ColorId>(n - 1 - t.south), static_cast<ColorId>(n - 1 - t.west)});
  const TileSet perm("perm", n, renamed);
  const TileSetMap iso = check_isomorphism(robinson, perm);
  REQUIRE(iso.status == SolveStatus::kSat);
  CHECK(reflects(robinson, perm, iso.assignment));

  CHECK(check_isomorphism(kOne, kMismatch).status == SolveStatus::kUnsat);
  CHECK(check_isomorphism(kOne, robinson).status == SolveStatus::kUnsat);
}

TEST_CASE("isomorphism is symmetric and matches brute force") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const TileSet a = make_tileset("a", oracle::random_tiles(rng, 3, 2));
    const TileSet b = make_tileset("b", oracle::random_tiles(rng, 3, 2));
    bool exists = false;
    if (a.size() == b.size()) {
      std::vector<TileIndex> f(a.size());
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<TileIndex>(i);
      do exists = exists || reflects(a, b, f);
      while (std::next_permutation(f.begin(), f.end()));
    }
    const TileSetMap ab = check_isomorphism(a, b), ba = check_isomorphism(b, a);
    CHECK((ab.status == SolveStatus::kSat) == exists);
    CHECK(ab.status == ba.status);
    if (exists) CHECK(reflects(a, b, ab.assignment));
  }
}
