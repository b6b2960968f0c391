#include "shiftforge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "shiftforge/compile.hpp"
#include "shiftforge/macrotile.hpp"
#include "shiftforge/render.hpp"
#include "shiftforge/robinson.hpp"
#include "shiftforge/solve.hpp"
#include "shiftforge/subshift.hpp"
#include "shiftforge/text_format.hpp"

namespace shiftforge {

namespace {

struct Common {
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  std::uint64_t budget_ms = SearchBudget{}.max_millis;
  std::string out;

  SearchBudget budget() const { return {budget_nodes, budget_ms}; }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--budget-nodes", c.budget_nodes, "search node budget")->check(CLI::PositiveNumber);
  sub->add_option("--budget-ms", c.budget_ms, "wall-clock budget in milliseconds")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "output file");
}

// Writes to --out when given, else to stdout.
void emit(const Common& c, std::ostream& out, const std::string& contents) {
  if (c.out.empty()) out << contents;
  else write_file(c.out, contents);
}

std::string first_keyword(const std::string& contents) {
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t end = contents.find('\n', pos);
    if (end == std::string::npos) end = contents.size();
    const std::string line = contents.substr(pos, end - pos);
    const std::size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string::npos && line[a] != '#') {
      const std::size_t b = line.find_first_of(" \t\r", a);
      return line.substr(a, b == std::string::npos ? std::string::npos : b - a);
    }
    pos = end + 1;
  }
  return {};
}

std::size_t dimension(const std::string& s, const char* what) {
  std::size_t v = 0;
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(s, &used);
    if (used != s.size() || s.front() == '-') throw std::invalid_argument(s);
    v = static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    throw InvalidInput(std::string(what) + " must be a positive integer, got '" + s + "'");
  }
  if (v == 0) throw InvalidInput(std::string(what) + " must be positive");
  return v;
}

int cmd_compile(const std::string& input, const std::string& kind, std::size_t tape_width, const Common& c,
                std::ostream& out) {
  const std::string contents = read_file(input);
  TileCompilation comp;
  if (kind == "sft") {
    comp = sft_to_wang(parse_sft(contents));
  } else if (kind == "subshift1d") {
    comp = sft_to_wang(lift_1d(parse_subshift(contents)));
  } else {
    if (tape_width == 0) throw InvalidInput("--kind tm needs --tape-width");
    comp = tm_to_tileset(parse_tm(contents), tape_width).compilation;
  }
  emit(c, out, write_tileset(comp.tileset, indexed(comp.decode), indexed(comp.provenance)));
  return kExitOk;
}

int cmd_solve(const std::string& path, const std::vector<std::string>& mode, const Common& c, std::ostream& out) {
  const TileSet ts = parse_tileset(read_file(path)).tileset;
  const std::string& m = mode.front();
  if (m == "rect" || m == "torus") {
    if (mode.size() != 3) throw InvalidInput("--mode " + m + " takes two dimensions");
    const std::size_t a = dimension(mode[1], "width"), b = dimension(mode[2], "height");
    if (m == "rect") {
      const RectangleResult r = solve_rectangle(ts, a, b, {}, c.budget());
      out << format_rectangle_result(r);
      if (r.tiling && !c.out.empty()) write_file(c.out, write_tiling(*r.tiling));
    } else {
      const TorusResult r = solve_torus(ts, a, b, c.budget());
      out << format_torus_result(r);
      if (r.tiling && !c.out.empty()) write_file(c.out, write_tiling(*r.tiling));
    }
    return kExitOk;
  }
  if (m == "domino") {
    if (mode.size() != 2) throw InvalidInput("--mode domino takes one bound");
    const DominoVerdict v = domino_semidecide(ts, dimension(mode[1], "max_n"), c.budget());
    out << format_domino_verdict(v);
    if (v.witness && !c.out.empty()) write_file(c.out, write_tiling(*v.witness));
    return kExitOk;
  }
  throw InvalidInput("unknown mode '" + m + "'; expected rect, torus or domino");
}

int cmd_render(const std::string& tileset_path, const std::string& tiling_path, const std::string& format,
               std::size_t cell_pixels, const Common& c, std::ostream& out) {
  const TileSet ts = parse_tileset(read_file(tileset_path)).tileset;
  const AnyTiling tiling = parse_tiling(read_file(tiling_path));
  RenderSpec spec{cell_pixels, format == "svg" ? ImageFormat::kSvg : ImageFormat::kPpm};
  const bool torus = std::holds_alternative<TorusTiling>(tiling);
  const Grid<TileIndex>& cells = torus ? std::get<TorusTiling>(tiling).cells : std::get<Tiling>(tiling).cells;
  emit(c, out, render(ts, cells, torus, spec));
  return kExitOk;
}

int cmd_verify(const std::string& spec_path, const std::string& artifact_path, const std::string& tileset_path,
               bool cyclic_flag, std::uint64_t budget_words, std::ostream& out) {
  const std::string spec_text = read_file(spec_path);
  const std::string artifact_text = read_file(artifact_path);
  const std::string spec_kind = first_keyword(spec_text);
  const std::string artifact_kind = first_keyword(artifact_text);

  Window window;
  bool cyclic = cyclic_flag;
  if (artifact_kind == "window") {
    window = parse_window(artifact_text);
  } else if (artifact_kind == "tiling") {
    if (tileset_path.empty()) throw InvalidInput("a tiling artifact needs --tileset with decode comments");
    const TileSetDocument doc = parse_tileset(read_file(tileset_path));
    std::vector<std::string> decode(doc.tileset.size());
    for (TileIndex i = 0; i < doc.tileset.size(); ++i) {
      const auto it = doc.decode.find(i);
      if (it == doc.decode.end()) throw InvalidInput("tile " + std::to_string(i) + " has no decode entry");
      decode[i] = it->second;
    }
    const AnyTiling tiling = parse_tiling(artifact_text);
    if (const auto* t = std::get_if<TorusTiling>(&tiling)) {
      if (!validate_torus(doc.tileset, *t)) throw ValidationFailure("torus tiling does not match the tile set");
      window = decode_cells(decode, t->cells);
      cyclic = true;
    } else {
      const Tiling& r = std::get<Tiling>(tiling);
      if (!validate_tiling(doc.tileset, r)) throw ValidationFailure("tiling does not match the tile set");
      window = decode_cells(decode, r.cells);
    }
  } else {
    throw InvalidInput("artifact must be a window or a tiling");
  }

  if (spec_kind == "subshift") {
    const LiftedVerdict v = check_lifted_window(parse_subshift(spec_text), window, cyclic, budget_words);
    out << to_string(v.kind);
    if (v.kind == SequenceVerdict::Kind::kViolation) out << ' ' << v.detail;
    out << '\n';
  } else if (spec_kind == "sft") {
    const SftSpec spec = parse_sft(spec_text);
    const WindowVerdict v = cyclic ? check_torus_window(spec, window) : check_window(spec, window);
    if (v.clean) out << "CLEAN\n";
    else out << "VIOLATION pattern=" << v.pattern_index << " x=" << v.x << " y=" << v.y << '\n';
  } else {
    throw InvalidInput("spec must be an sft or a subshift");
  }
  return kExitOk;
}

int cmd_macro(const std::string& path, std::size_t n, std::uint64_t max_blocks, const std::string& sidecar,
              const std::string& simulate, const std::string& isomorphic, const Common& c, std::ostream& out) {
  const TileSet ts = parse_tileset(read_file(path)).tileset;
  const MacroResult r = macro_tiles(ts, n, c.budget(), max_blocks);
  if (!r.macro) {
    out << "BUDGET_EXCEEDED blocks_seen=" << r.blocks_seen << '\n';
    return kExitOk;
  }
  const MacroTileSet& m = *r.macro;
  out << format_macro_summary(m);
  if (!c.out.empty()) write_file(c.out, write_tileset(m.tileset));
  if (!sidecar.empty()) write_file(sidecar, write_macro_sidecar(m));
  if (!simulate.empty()) {
    const TileSet target = parse_tileset(read_file(simulate)).tileset;
    out << format_tileset_map("SIMULATION", find_simulation(m.tileset, target, c.budget()));
  }
  if (!isomorphic.empty()) {
    const TileSet target = parse_tileset(read_file(isomorphic)).tileset;
    out << format_tileset_map("ISOMORPHIC", check_isomorphism(m.tileset, target, c.budget()));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wang tiles, subshifts and tiling search", "shiftforge"};
  app.require_subcommand(1);

  Common common;
  std::string input, kind = "sft", path, path2, mode_format = "ppm", tileset_path, sidecar, simulate, isomorphic;
  std::size_t tape_width = 0, cell_pixels = 16, macro_n = 0, max_square = 16, max_period = 6;
  std::uint64_t budget_words = kDefaultWordBudget, max_blocks = kDefaultMaxBlocks;
  std::vector<std::string> mode;
  bool cyclic = false;

  auto* compile = app.add_subcommand("compile", "compile an sft, 1D subshift or Turing machine to tiles");
  compile->add_option("input", input, "spec file")->required();
  compile->add_option("--kind", kind, "sft | subshift1d | tm")->check(CLI::IsMember({"sft", "subshift1d", "tm"}));
  compile->add_option("--tape-width", tape_width, "tape cells for --kind tm");
  add_common(compile, common);

  auto* solve = app.add_subcommand("solve", "rectangle, torus or domino search");
  solve->add_option("tileset", path, "tile-set file")->required();
  solve->add_option("--mode", mode, "rect W H | torus P Q | domino MAX_N")->required()->expected(2, 3);
  add_common(solve, common);

  auto* rend = app.add_subcommand("render", "draw a tiling as PPM or SVG");
  rend->add_option("tileset", path, "tile-set file")->required();
  rend->add_option("tiling", path2, "tiling file")->required();
  rend->add_option("--format", mode_format, "ppm | svg")->check(CLI::IsMember({"ppm", "svg"}));
  rend->add_option("--cell-pixels", cell_pixels, "pixels per cell side")->check(CLI::PositiveNumber);
  add_common(rend, common);

  auto* verify = app.add_subcommand("verify", "check a window or decoded tiling against a spec");
  verify->add_option("spec", path, "sft or subshift file")->required();
  verify->add_option("artifact", path2, "window or tiling file")->required();
  verify->add_option("--tileset", tileset_path, "tile set whose decode comments map tiles to letters");
  verify->add_flag("--cyclic", cyclic, "treat window rows as periods");
  verify->add_option("--budget-words", budget_words, "forbidden words drawn from a stream")
      ->check(CLI::PositiveNumber);
  add_common(verify, common);

  auto* robinson = app.add_subcommand("robinson", "the built-in aperiodic set");
  robinson->require_subcommand(1);
  auto* rexport = robinson->add_subcommand("export", "write the pinned Robinson tile set");
  add_common(rexport, common);

  auto* macro = app.add_subcommand("macro", "macro-tiles, simulation and isomorphism");
  macro->add_option("tileset", path, "tile-set file")->required();
  macro->add_option("--n", macro_n, "block size")->required()->check(CLI::PositiveNumber);
  macro->add_option("--max-blocks", max_blocks, "give up past this many blocks")->check(CLI::PositiveNumber);
  macro->add_option("--sidecar", sidecar, "write the block of every macro-tile here");
  macro->add_option("--simulate", simulate, "tile set to map the macro-tiles into");
  macro->add_option("--isomorphic", isomorphic, "tile set to compare the macro-tiles with");
  add_common(macro, common);

  auto* evidence = app.add_subcommand("evidence", "squares and tori search for aperiodicity evidence");
  evidence->add_option("--tileset", tileset_path, "tile-set file (default: Robinson)");
  evidence->add_option("--max-square", max_square, "largest square")->check(CLI::PositiveNumber);
  evidence->add_option("--max-period", max_period, "largest torus period")->check(CLI::PositiveNumber);
  add_common(evidence, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compile->parsed()) return cmd_compile(input, kind, tape_width, common, out);
    if (solve->parsed()) return cmd_solve(path, mode, common, out);
    if (rend->parsed()) return cmd_render(path, path2, mode_format, cell_pixels, common, out);
    if (verify->parsed()) return cmd_verify(path, path2, tileset_path, cyclic, budget_words, out);
    if (rexport->parsed()) {
      const RobinsonSet r = robinson_tileset();
      emit(common, out,
           std::string("# ") + kRobinsonVersion + "\n" + write_tileset(r.tileset, {}, indexed(r.tile_roles)));
      return kExitOk;
    }
    if (macro->parsed()) return cmd_macro(path, macro_n, max_blocks, sidecar, simulate, isomorphic, common, out);
    if (evidence->parsed()) {
      const TileSet ts = tileset_path.empty() ? robinson_tileset().tileset : parse_tileset(read_file(tileset_path)).tileset;
      emit(common, out, format_evidence(aperiodicity_evidence(ts, max_square, max_period, common.budget())));
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const ValidationFailure& e) {
    err << "validation failed: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace shiftforge
