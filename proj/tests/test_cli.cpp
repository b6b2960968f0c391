#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "shiftforge/cli.hpp"
#include "shiftforge/robinson.hpp"
#include "shiftforge/text_format.hpp"

using namespace shiftforge;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("shiftforge_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& contents) const {
    const std::string p = (dir / name).string();
    write_file(p, contents);
    return p;
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("compile") {
  Scratch s;
  const auto f11 = s.file("f11.sub", "subshift alphabet=0,1\nforbid 11\n");
  const Run r = run({"compile", "--kind", "subshift1d", f11});
  REQUIRE(r.code == 0);
  CHECK(parse_tileset(r.out).tileset.size() == 3);
  CHECK(r.out.find("# decode 0 0") != std::string::npos);

  const auto single = s.file("a.sub", "subshift alphabet=a\n");
  CHECK(parse_tileset(run({"compile", "--kind", "subshift1d", single}).out).tileset.size() == 1);

  const auto stream = s.file("s.sub", "subshift alphabet=0,1\nstream all_words_min_len 3\n");
  CHECK(run({"compile", "--kind", "subshift1d", stream}).code == 3);

  const auto tm = s.file("bad.tm", "tm states=2 start=a blank=_\nrule a _ -> b 1 Q\n");
  const Run bad = run({"compile", "--kind", "tm", "--tape-width", "4", tm});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);

  CHECK(run({"compile", "--kind", "cnf", f11}).code == 2);
  CHECK(run({"compile", "--kind", "tm", s.file("ok.tm", "tm states=1 start=h blank=_\nhalt h\n")}).code == 2);
  CHECK(run({"compile", s.path("missing.sft")}).code == 2);

  const auto out = s.path("out.tiles");
  CHECK(run({"compile", "--kind", "subshift1d", f11, "--out", out}).code == 0);
  CHECK(read_file(out) == r.out);
}

TEST_CASE("solve") {
  Scratch s;
  const auto one = s.file("one.tiles", "tileset one colors=1\ntile 0 0 0 0\n");
  const auto bad = s.file("bad.tiles", "tileset bad colors=3\ntile 0 1 0 2\n");
  CHECK(run({"solve", one, "--mode", "rect", "3", "3"}).out == "SAT\n0 0 0\n0 0 0\n0 0 0\n");
  CHECK(run({"solve", bad, "--mode", "torus", "1", "1"}).out == "UNSAT\n");
  CHECK(run({"solve", one, "--mode", "rect", "0", "3"}).code == 2);
  CHECK(run({"solve", one, "--mode", "rect", "x", "3"}).code == 2);
  CHECK(run({"solve", one, "--mode", "hex", "3", "3"}).code == 2);
  CHECK(run({"solve", one, "--mode", "domino", "2", "2"}).code == 2);

  const auto rob = s.path("rob.tiles");
  REQUIRE(run({"robinson", "export", "--out", rob}).code == 0);
  const Run d = run({"solve", rob, "--mode", "domino", "4"});
  CHECK(d.out.rfind("UNDETERMINED completed_n=4\n", 0) == 0);

  const auto witness = s.path("w.tiling");
  CHECK(run({"solve", rob, "--mode", "rect", "6", "6", "--out", witness}).code == 0);
  const AnyTiling t = parse_tiling(read_file(witness));
  CHECK(validate_tiling(robinson_tileset().tileset, std::get<Tiling>(t)));
}

TEST_CASE("render") {
  Scratch s;
  const auto one = s.file("one.tiles", "tileset one colors=1\ntile 0 0 0 0\n");
  const auto t1 = s.file("t1.tiling", "tiling rect 1 1\n0\n");
  const Run r = run({"render", one, t1, "--cell-pixels", "8"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("P6\n8 8\n255\n", 0) == 0);

  const auto bad = s.file("bad.tiles", "tileset bad colors=3\ntile 0 1 0 2\n");
  const auto t2 = s.file("t2.tiling", "tiling rect 2 1\n0 0\n");
  CHECK(run({"render", bad, t2}).code == 4);
  CHECK(run({"render", one, t1, "--format", "gif"}).code == 2);
  CHECK(run({"render", one, t1, "--format", "svg"}).out.rfind("<svg", 0) == 0);
}

TEST_CASE("verify") {
  Scratch s;
  const auto f11 = s.file("f11.sub", "subshift alphabet=0,1\nforbid 11\n");
  const auto tiles = s.path("f11.tiles");
  REQUIRE(run({"compile", "--kind", "subshift1d", f11, "--out", tiles}).code == 0);
  const auto torus = s.path("w.tiling");
  REQUIRE(run({"solve", tiles, "--mode", "torus", "4", "4", "--out", torus}).code == 0);
  CHECK(run({"verify", f11, torus, "--tileset", tiles}).out == "CLEAN\n");
  CHECK(run({"verify", f11, torus}).code == 2);

  const auto win = s.file("w.win", "window 3 2\n011\n011\n");
  const Run v = run({"verify", f11, win});
  CHECK(v.out.rfind("VIOLATION", 0) == 0);

  const auto sft = s.file("f.sft", "sft alphabet=0,1\nforbid 2 1\n11\n");
  CHECK(run({"verify", sft, win}).out == "VIOLATION pattern=0 x=1 y=0\n");

  const auto stream = s.file("s.sub", "subshift alphabet=0,1\nstream all_words_min_len 5\n");
  const auto row = s.file("r.win", "window 4 1\n0101\n");
  CHECK(run({"verify", stream, row, "--budget-words", "10"}).out == "BUDGET_EXHAUSTED_CLEAN\n");

  const auto letters = s.file("abc.win", "window 2 1\nab\n");
  CHECK(run({"verify", f11, letters}).code == 2);
}

TEST_CASE("export, macro and evidence") {
  Scratch s;
  const Run e = run({"robinson", "export"});
  REQUIRE(e.code == 0);
  const TileSetDocument doc = parse_tileset(e.out);
  CHECK(doc.tileset == robinson_tileset().tileset);
  CHECK(normalize_tileset(doc.tileset) == doc.tileset);

  const auto one = s.file("one.tiles", "tileset one colors=1\ntile 0 0 0 0\n");
  const auto out = s.path("m.tiles"), side = s.path("m.blocks");
  const Run m = run({"macro", one, "--n", "2", "--out", out, "--sidecar", side, "--simulate", one});
  CHECK(m.code == 0);
  CHECK(m.out.rfind("MACRO n=2 blocks=1 tiles=1 colors=2\nSIMULATION\n0 -> 0\n", 0) == 0);
  CHECK(parse_tileset(read_file(out)).tileset.size() == 1);
  CHECK(read_file(side).find("macro 0 block 0") != std::string::npos);

  const Run ev = run({"evidence", "--max-square", "3", "--max-period", "2"});
  CHECK(ev.out.find("verdict CONSISTENT_WITH_APERIODICITY") != std::string::npos);
  const Run ev1 = run({"evidence", "--tileset", one, "--max-square", "2", "--max-period", "1"});
  CHECK(ev1.out.find("verdict NOT_APERIODIC") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"solve"}).code == 2);
}
