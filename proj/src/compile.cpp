#include "shiftforge/compile.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "text_util.hpp"

namespace shiftforge {

namespace {

constexpr double kMaxBlocks = 2e7;

// Sub-block as "[row/row/...]", rows top first.
std::string strip_key(const Pattern& block, std::size_t x0, std::size_t y0, std::size_t w, std::size_t h) {
  std::string key = "[";
  for (std::size_t r = 0; r < h; ++r) {
    if (r) key.push_back('/');
    const std::size_t y = y0 + h - 1 - r;
    for (std::size_t x = x0; x < x0 + w; ++x) key.push_back(block.at(x, y));
  }
  key.push_back(']');
  return key;
}

bool contains_pattern(const Pattern& block, const Pattern& p) {
  if (p.width() > block.width() || p.height() > block.height()) return false;
  for (std::size_t y = 0; y + p.height() <= block.height(); ++y) {
    for (std::size_t x = 0; x + p.width() <= block.width(); ++x) {
      bool hit = true;
      for (std::size_t py = 0; py < p.height() && hit; ++py)
        for (std::size_t px = 0; px < p.width() && hit; ++px) hit = block.at(x + px, y + py) == p.at(px, py);
      if (hit) return true;
    }
  }
  return false;
}

TileCompilation finish(const std::string& name, std::vector<Tile> tiles, std::vector<std::string> labels,
                       const std::vector<std::string>& decode, const std::vector<std::string>& provenance) {
  const std::size_t color_count = labels.size();
  const Normalized norm = normalize_with_map(TileSet(name, color_count, std::move(tiles), std::move(labels)));
  TileCompilation out{norm.tileset, std::vector<std::string>(norm.tileset.size()),
                      std::vector<std::string>(norm.tileset.size())};
  for (std::size_t i = 0; i < norm.index_map.size(); ++i) {
    out.decode[norm.index_map[i]] = decode[i];
    out.provenance[norm.index_map[i]] = provenance[i];
  }
  return out;
}

}  // namespace

TileCompilation sft_to_wang(const SftSpec& spec) {
  const auto& letters = spec.alphabet().letters();
  // 1x1 blocks have empty strips, so every tile would get the same four
  // colors; with two or more letters use 2x2 blocks instead.
  std::size_t k = std::max<std::size_t>(spec.window(), 1);
  if (k == 1 && letters.size() > 1) k = 2;
  const std::size_t cells = k * k;
  if (std::pow(static_cast<double>(letters.size()), static_cast<double>(cells)) > kMaxBlocks)
    throw Unsupported("too many " + std::to_string(k) + "x" + std::to_string(k) + " blocks to enumerate");

  struct Raw {
    std::string west, east, south, north, block;
    Letter letter;
  };
  std::vector<Raw> raw;
  std::set<std::string> keys;
  std::vector<std::size_t> digits(cells, 0);
  Pattern block(k, k);
  while (true) {
    for (std::size_t i = 0; i < cells; ++i) block.cells()[i] = letters[digits[i]];
    const bool legal = std::none_of(spec.forbidden().begin(), spec.forbidden().end(),
                                    [&](const Pattern& p) { return contains_pattern(block, p); });
    if (legal) {
      Raw r{strip_key(block, 0, 0, k - 1, k), strip_key(block, 1, 0, k - 1, k), strip_key(block, 0, 0, k, k - 1),
            strip_key(block, 0, 1, k, k - 1), strip_key(block, 0, 0, k, k), block.at(0, 0)};
      keys.insert({r.west, r.east, r.south, r.north});
      raw.push_back(std::move(r));
    }
    std::size_t i = cells;
    while (i > 0 && ++digits[i - 1] == letters.size()) digits[--i] = 0;
    if (i == 0) break;
  }

  const std::vector<std::string> labels(keys.begin(), keys.end());
  auto id = [&](const std::string& key) {
    return static_cast<ColorId>(std::lower_bound(labels.begin(), labels.end(), key) - labels.begin());
  };
  std::vector<Tile> tiles;
  std::vector<std::string> decode, provenance;
  for (const Raw& r : raw) {
    tiles.push_back({id(r.north), id(r.east), id(r.south), id(r.west)});
    decode.emplace_back(1, r.letter);
    provenance.push_back("block " + r.block);
  }
  return finish("sft", std::move(tiles), labels, decode, provenance);
}

Window decode_cells(const std::vector<std::string>& decode, const Grid<TileIndex>& cells) {
  Window w(cells.width(), cells.height());
  for (std::size_t i = 0; i < cells.cell_count(); ++i) {
    const TileIndex t = cells.cells()[i];
    if (t >= decode.size()) throw InvalidInput("tile index " + std::to_string(t) + " has no decode entry");
    if (decode[t].size() != 1) throw InvalidInput("decode entry for tile " + std::to_string(t) + " is not a single letter");
    w.cells()[i] = decode[t][0];
  }
  return w;
}

std::map<TileIndex, std::string> indexed(const std::vector<std::string>& values) {
  std::map<TileIndex, std::string> out;
  for (std::size_t i = 0; i < values.size(); ++i) out.emplace(static_cast<TileIndex>(i), values[i]);
  return out;
}

void TmSpec::validate() const {
  const std::size_t n = state_count();
  if (n == 0) throw InvalidInput("machine has no states");
  if (start >= n) throw InvalidInput("start state out of range");
  if (halting.size() != n) throw InvalidInput("halting flags do not match the state count");
  if (!std::binary_search(symbols.begin(), symbols.end(), blank)) throw InvalidInput("blank is not a tape symbol");
  for (const auto& [key, rule] : rules) {
    if (key.first >= n || rule.next >= n) throw InvalidInput("rule references an unknown state");
    if (halting[key.first]) throw InvalidInput("halting state '" + state_names[key.first] + "' has a rule");
    if (!std::binary_search(symbols.begin(), symbols.end(), key.second) ||
        !std::binary_search(symbols.begin(), symbols.end(), rule.write))
      throw InvalidInput("rule uses a symbol outside the tape alphabet");
  }
}

TmSpec parse_tm(std::string_view contents) {
  const auto lines = text::content_lines(contents);
  if (lines.empty()) throw ParseError(1, 1, "missing 'tm' header");
  const auto& head = lines[0];
  text::expect_keyword(head, "tm");
  text::expect_tokens(head, 4, "tm states=<n> start=<s> blank=<b>");
  const auto count_text = text::key_value(head, head.tokens[1], "states");
  const text::Token count_tok{count_text, head.tokens[1].column + 7};
  const auto declared = text::parse_uint(head, count_tok);
  const std::string start_name(text::key_value(head, head.tokens[2], "start"));
  const auto blank = text::key_value(head, head.tokens[3], "blank");
  if (blank.size() != 1) text::fail(head, head.tokens[3], "blank must be a single character");

  TmSpec tm;
  tm.blank = blank[0];
  std::map<std::string, std::size_t> ids;
  auto state = [&](std::string_view name) {
    const auto [it, fresh] = ids.emplace(std::string(name), tm.state_names.size());
    if (fresh) tm.state_names.emplace_back(name);
    return it->second;
  };
  tm.start = state(start_name);
  std::set<char> symbols{tm.blank};
  std::vector<std::pair<std::size_t, const text::Line*>> rule_lines;
  std::set<std::size_t> halts;

  auto symbol = [&](const text::Line& l, const text::Token& t) {
    if (t.text.size() != 1) text::fail(l, t, "tape symbols are single characters");
    symbols.insert(t.text[0]);
    return t.text[0];
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const std::string_view kw = l.tokens[0].text;
    if (kw == "rule") {
      text::expect_tokens(l, 7, "rule <state> <read> -> <state'> <write> <L|R>");
      if (l.tokens[3].text != "->") text::fail(l, l.tokens[3], "expected '->'");
      const std::size_t from = state(l.tokens[1].text);
      const char read = symbol(l, l.tokens[2]);
      const std::size_t to = state(l.tokens[4].text);
      const char write = symbol(l, l.tokens[5]);
      const std::string_view mv = l.tokens[6].text;
      if (mv != "L" && mv != "R") text::fail(l, l.tokens[6], "move must be L or R");
      if (!tm.rules.emplace(std::pair{from, read}, TmRule{to, write, mv == "L" ? Move::kLeft : Move::kRight}).second)
        text::fail(l, "duplicate rule for this state and symbol");
      rule_lines.emplace_back(from, &l);
    } else if (kw == "halt") {
      text::expect_tokens(l, 2, "halt <state>");
      halts.insert(state(l.tokens[1].text));
    } else {
      text::fail(l, "expected 'rule' or 'halt'");
    }
  }
  if (tm.state_names.size() > declared)
    text::fail(head, head.tokens[1], "more than " + std::to_string(declared) + " states are named");
  tm.halting.assign(tm.state_names.size(), false);
  for (std::size_t h : halts) tm.halting[h] = true;
  for (const auto& [from, line] : rule_lines)
    if (tm.halting[from]) text::fail(*line, "halting state '" + tm.state_names[from] + "' cannot have rules");
  tm.symbols.assign(symbols.begin(), symbols.end());
  tm.validate();
  return tm;
}

namespace {

TmConfig initial_config(const TmSpec& tm, std::string_view input, std::size_t tape_width, std::size_t head_position) {
  if (tape_width == 0) throw InvalidInput("tape width must be positive");
  if (input.size() > tape_width) throw InvalidInput("input is longer than the tape window");
  if (head_position >= tape_width) throw InvalidInput("head position outside the tape window");
  for (char c : input)
    if (!std::binary_search(tm.symbols.begin(), tm.symbols.end(), c))
      throw InvalidInput(std::string("input symbol '") + c + "' is not a tape symbol");
  TmConfig c{std::string(input), head_position, tm.start};
  c.tape.resize(tape_width, tm.blank);
  return c;
}

}  // namespace

TmRun simulate_tm(const TmSpec& tm, std::string_view input, std::size_t tape_width, std::size_t steps,
                  std::size_t head_position) {
  tm.validate();
  TmRun run;
  TmConfig c = initial_config(tm, input, tape_width, head_position);
  run.configs.push_back(c);
  for (std::size_t step = 0; step < steps; ++step) {
    if (tm.halting[c.state]) {
      run.end = TmRun::End::kHalted;
      return run;
    }
    const auto it = tm.rules.find({c.state, c.tape[c.head]});
    if (it == tm.rules.end()) {
      run.end = TmRun::End::kStuck;
      return run;
    }
    const TmRule& r = it->second;
    c.tape[c.head] = r.write;
    if (r.move == Move::kLeft ? c.head == 0 : c.head + 1 == tape_width) {
      run.end = TmRun::End::kLeftWindow;
      return run;
    }
    c.head = r.move == Move::kLeft ? c.head - 1 : c.head + 1;
    c.state = r.next;
    run.configs.push_back(c);
  }
  if (tm.halting[c.state]) run.end = TmRun::End::kHalted;
  return run;
}

namespace {

std::string plain_label(char a) { return std::string("P(") + a + ")"; }
std::string head_label(const TmSpec& tm, char a, std::size_t q) {
  return std::string("H(") + a + "," + tm.state_names[q] + ")";
}

}  // namespace

TmCompilation tm_to_tileset(const TmSpec& tm, std::size_t tape_width) {
  tm.validate();
  if (tape_width == 0) throw InvalidInput("tape width must be positive");

  std::vector<std::string> labels;
  std::map<std::string, ColorId> ids;
  auto color = [&](const std::string& label) {
    const auto [it, fresh] = ids.emplace(label, static_cast<ColorId>(labels.size()));
    if (fresh) labels.push_back(label);
    return it->second;
  };
  std::map<std::string, TmCellColor> cell_meaning;
  for (char a : tm.symbols) {
    cell_meaning[plain_label(a)] = {a, std::nullopt};
    for (std::size_t q = 0; q < tm.state_count(); ++q) cell_meaning[head_label(tm, a, q)] = {a, q};
  }

  const ColorId none = color("NONE");
  const ColorId wall_l = color("WALL_L");
  const ColorId wall_r = color("WALL_R");
  const ColorId halted = color("HALTED");
  auto from_w = [&](std::size_t q) { return color("R(" + tm.state_names[q] + ")"); };
  auto from_e = [&](std::size_t q) { return color("L(" + tm.state_names[q] + ")"); };

  struct Base {
    Tile tile;
    char letter;
    std::string role;
  };
  std::vector<Base> base;
  for (char c : tm.symbols) {
    const ColorId p = color(plain_label(c));
    base.push_back({{p, none, p, none}, c, std::string("plain ") + c});
    for (std::size_t q = 0; q < tm.state_count(); ++q) {
      const ColorId h = color(head_label(tm, c, q));
      base.push_back({{h, none, p, from_w(q)}, c, std::string("enter ") + c + " state=" + tm.state_names[q] + " from=W"});
      base.push_back({{h, from_e(q), p, none}, c, std::string("enter ") + c + " state=" + tm.state_names[q] + " from=E"});
    }
  }
  for (const auto& [key, rule] : tm.rules) {
    const auto [q, a] = key;
    const ColorId s = color(head_label(tm, a, q));
    const ColorId n = color(plain_label(rule.write));
    const bool right = rule.move == Move::kRight;
    const Tile t{n, right ? from_w(rule.next) : none, s, right ? none : from_e(rule.next)};
    base.push_back({t, a,
                    "step state=" + tm.state_names[q] + " read=" + a + " write=" + rule.write +
                        " move=" + (right ? "R" : "L") + " next=" + tm.state_names[rule.next]});
  }
  for (std::size_t q = 0; q < tm.state_count(); ++q) {
    if (!tm.halting[q]) continue;
    for (char a : tm.symbols)
      base.push_back({{halted, none, color(head_label(tm, a, q)), none}, a,
                      "halt state=" + tm.state_names[q] + " read=" + a});
  }

  std::vector<Tile> tiles;
  std::vector<std::string> decode, provenance;
  for (const Base& b : base) {
    for (int wall = 0; wall < 4; ++wall) {
      const bool west = wall & 1, east = wall & 2;
      if ((west && b.tile.west != none) || (east && b.tile.east != none)) continue;
      Tile t = b.tile;
      std::string role = b.role;
      if (west) {
        t.west = wall_l;
        role += " wall=W";
      }
      if (east) {
        t.east = wall_r;
        role += " wall=E";
      }
      tiles.push_back(t);
      decode.emplace_back(1, b.letter);
      provenance.push_back(std::move(role));
    }
  }

  TmCompilation out;
  out.compilation = finish("tm", std::move(tiles), std::move(labels), decode, provenance);
  out.tape_width = tape_width;
  const TileSet& ts = out.compilation.tileset;
  for (ColorId c = 0; c < ts.color_count(); ++c) {
    const std::string& label = ts.color_labels()[c];
    if (const auto it = cell_meaning.find(label); it != cell_meaning.end()) out.cell_colors.emplace(c, it->second);
    if (label == "WALL_L") out.wall_left = c;
    if (label == "WALL_R") out.wall_right = c;
  }
  return out;
}

std::optional<BoundaryConstraint> tm_initial_boundary(const TmCompilation& compiled, const TmSpec& tm,
                                                      std::string_view input, std::size_t height,
                                                      std::size_t head_position) {
  const TmConfig c = initial_config(tm, input, compiled.tape_width, head_position);
  BoundaryConstraint b;
  std::vector<ColorId> south;
  for (std::size_t x = 0; x < c.tape.size(); ++x) {
    TmCellColor want{c.tape[x], x == c.head ? std::optional<std::size_t>(c.state) : std::nullopt};
    const auto it = std::find_if(compiled.cell_colors.begin(), compiled.cell_colors.end(),
                                 [&](const auto& kv) { return kv.second == want; });
    if (it == compiled.cell_colors.end()) return std::nullopt;
    south.push_back(it->first);
  }
  b.south = std::move(south);
  b.west = std::vector<ColorId>(height, compiled.wall_left);
  b.east = std::vector<ColorId>(height, compiled.wall_right);
  return b;
}

std::optional<TmConfig> decode_tm_row(const TmCompilation& compiled, const Tiling& tiling, std::size_t row) {
  if (row >= tiling.height()) return std::nullopt;
  const TileSet& ts = compiled.compilation.tileset;
  TmConfig c;
  std::size_t heads = 0;
  for (std::size_t x = 0; x < tiling.width(); ++x) {
    const TileIndex t = tiling.cells.at(x, row);
    if (t >= ts.size()) throw InvalidInput("tile index out of range");
    const auto it = compiled.cell_colors.find(ts[t].south);
    if (it == compiled.cell_colors.end()) return std::nullopt;
    c.tape.push_back(it->second.symbol);
    if (it->second.head_state) {
      ++heads;
      c.head = x;
      c.state = *it->second.head_state;
    }
  }
  if (heads != 1) return std::nullopt;
  return c;
}

}  // namespace shiftforge
