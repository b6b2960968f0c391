#include "shiftforge/text_format.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "text_util.hpp"

namespace shiftforge {

using text::Line;

namespace {

std::string rest_of_line(const Line& line, std::size_t first_token) {
  if (first_token >= line.tokens.size()) return {};
  const std::size_t start = line.tokens[first_token].column - 1;
  return std::string(line.raw.substr(start));
}

// Reads `count` rows of exactly `width` letters starting at lines[first].
Grid<Letter> read_letter_rows(const std::vector<Line>& lines, std::size_t first, std::size_t width,
                              std::size_t height, const Line& header) {
  if (first + height > lines.size()) text::fail(header, "expected " + std::to_string(height) + " rows");
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < height; ++r) {
    const Line& l = lines[first + r];
    if (l.tokens.size() != 1 || l.tokens[0].text.size() != width)
      text::fail(l, "expected a row of " + std::to_string(width) + " letters");
    rows.emplace_back(l.tokens[0].text);
  }
  return pattern_from_rows(rows);
}

std::size_t positive(const Line& line, const text::Token& tok) {
  const auto v = text::parse_uint(line, tok);
  if (v == 0) text::fail(line, tok, "dimension must be positive");
  return static_cast<std::size_t>(v);
}

}  // namespace

TileSetDocument parse_tileset(std::string_view contents) {
  TileSetDocument doc;
  std::map<ColorId, std::string> labels;
  const std::vector<Line> all = text::split_lines(contents);
  const Line* header = nullptr;
  std::size_t color_count = 0;
  std::string name;
  std::vector<Tile> tiles;
  std::set<Tile> seen;

  for (const Line& line : all) {
    if (line.tokens.empty()) continue;
    if (line.comment) {
      if (line.tokens.size() >= 3 && line.tokens[0].text == "#") {
        const std::string_view kind = line.tokens[1].text;
        if (kind == "color" || kind == "decode" || kind == "provenance") {
          const auto id = text::parse_uint(line, line.tokens[2]);
          const std::string value = rest_of_line(line, 3);
          if (kind == "color") labels[static_cast<ColorId>(id)] = value;
          else if (kind == "decode") doc.decode[static_cast<TileIndex>(id)] = value;
          else doc.provenance[static_cast<TileIndex>(id)] = value;
        }
      }
      continue;
    }
    if (!header) {
      text::expect_keyword(line, "tileset");
      text::expect_tokens(line, 3, "tileset <name> colors=<n>");
      name = std::string(line.tokens[1].text);
      const auto value = text::key_value(line, line.tokens[2], "colors");
      text::Token value_tok{value, line.tokens[2].column + 7};
      color_count = static_cast<std::size_t>(text::parse_uint(line, value_tok));
      header = &line;
      continue;
    }
    text::expect_keyword(line, "tile");
    text::expect_tokens(line, 5, "tile <north> <east> <south> <west>");
    ColorId c[4];
    for (int i = 0; i < 4; ++i) {
      const auto v = text::parse_uint(line, line.tokens[1 + i]);
      if (v >= color_count)
        text::fail(line, line.tokens[1 + i], "color " + std::to_string(v) + " outside [0," + std::to_string(color_count) + ")");
      c[i] = static_cast<ColorId>(v);
    }
    const Tile t{c[0], c[1], c[2], c[3]};
    if (!seen.insert(t).second) text::fail(line, "duplicate tile");
    tiles.push_back(t);
  }
  if (!header) throw ParseError(all.empty() ? 1 : all.back().number, 1, "missing 'tileset' header");

  std::vector<std::string> color_labels;
  if (!labels.empty()) {
    color_labels.resize(color_count);
    for (auto& [id, label] : labels)
      if (id < color_count) color_labels[id] = label;
  }
  doc.tileset = TileSet(name, color_count, std::move(tiles), std::move(color_labels));
  for (const auto& [i, letter] : doc.decode)
    if (i >= doc.tileset.size()) throw InvalidInput("decode entry for a tile index out of range");
  return doc;
}

std::string write_tileset(const TileSet& tileset, const std::map<TileIndex, std::string>& decode,
                          const std::map<TileIndex, std::string>& provenance) {
  std::ostringstream out;
  for (ColorId c = 0; c < tileset.color_labels().size(); ++c)
    if (!tileset.color_labels()[c].empty()) out << "# color " << c << ' ' << tileset.color_labels()[c] << '\n';
  for (const auto& [i, letter] : decode) out << "# decode " << i << ' ' << letter << '\n';
  for (const auto& [i, text] : provenance) out << "# provenance " << i << ' ' << text << '\n';
  out << "tileset " << (tileset.name().empty() ? "unnamed" : tileset.name()) << " colors=" << tileset.color_count()
      << '\n';
  for (const Tile& t : tileset.tiles()) out << "tile " << t.north << ' ' << t.east << ' ' << t.south << ' ' << t.west << '\n';
  return out.str();
}

SftSpec parse_sft(std::string_view contents) {
  const std::vector<Line> lines = text::content_lines(contents);
  if (lines.empty()) throw ParseError(1, 1, "missing 'sft' header");
  const Line& head = lines[0];
  text::expect_keyword(head, "sft");
  text::expect_tokens(head, 2, "sft alphabet=<comma-list>");
  const auto list = text::key_value(head, head.tokens[1], "alphabet");
  const Alphabet alphabet(text::parse_letter_list(head, head.tokens[1], list));

  std::vector<Pattern> forbidden;
  std::size_t i = 1;
  while (i < lines.size()) {
    const Line& l = lines[i];
    text::expect_keyword(l, "forbid");
    text::expect_tokens(l, 3, "forbid <w> <h>");
    const std::size_t w = positive(l, l.tokens[1]);
    const std::size_t h = positive(l, l.tokens[2]);
    Pattern p = read_letter_rows(lines, i + 1, w, h, l);
    for (std::size_t r = 0; r < h; ++r) {
      const Line& row = lines[i + 1 + r];
      for (std::size_t x = 0; x < w; ++x)
        if (!alphabet.contains(row.tokens[0].text[x]))
          throw ParseError(row.number, row.tokens[0].column + x, "letter outside the alphabet");
    }
    forbidden.push_back(std::move(p));
    i += 1 + h;
  }
  return SftSpec(alphabet, std::move(forbidden));
}

std::string write_sft(const SftSpec& spec) {
  std::ostringstream out;
  out << "sft alphabet=";
  for (std::size_t i = 0; i < spec.alphabet().size(); ++i) out << (i ? "," : "") << spec.alphabet()[i];
  out << '\n';
  for (const Pattern& p : spec.forbidden()) {
    out << "forbid " << p.width() << ' ' << p.height() << '\n';
    for (const std::string& row : rows_top_first(p)) out << row << '\n';
  }
  return out.str();
}

Window parse_window(std::string_view contents) {
  const std::vector<Line> lines = text::content_lines(contents);
  if (lines.empty()) throw ParseError(1, 1, "missing 'window' header");
  const Line& head = lines[0];
  text::expect_keyword(head, "window");
  text::expect_tokens(head, 3, "window <w> <h>");
  const std::size_t w = positive(head, head.tokens[1]);
  const std::size_t h = positive(head, head.tokens[2]);
  if (lines.size() != 1 + h) text::fail(head, "expected exactly " + std::to_string(h) + " rows");
  return read_letter_rows(lines, 1, w, h, head);
}

std::string write_window(const Window& window) {
  std::ostringstream out;
  out << "window " << window.width() << ' ' << window.height() << '\n';
  for (const std::string& row : rows_top_first(window)) out << row << '\n';
  return out.str();
}

AnyTiling parse_tiling(std::string_view contents) {
  const std::vector<Line> lines = text::content_lines(contents);
  if (lines.empty()) throw ParseError(1, 1, "missing 'tiling' header");
  const Line& head = lines[0];
  text::expect_keyword(head, "tiling");
  text::expect_tokens(head, 4, "tiling rect|torus <w> <h>");
  const std::string_view kind = head.tokens[1].text;
  if (kind != "rect" && kind != "torus") text::fail(head, head.tokens[1], "expected 'rect' or 'torus'");
  const std::size_t w = positive(head, head.tokens[2]);
  const std::size_t h = positive(head, head.tokens[3]);
  if (lines.size() != 1 + h) text::fail(head, "expected exactly " + std::to_string(h) + " rows");
  Grid<TileIndex> cells(w, h);
  for (std::size_t r = 0; r < h; ++r) {
    const Line& l = lines[1 + r];
    if (l.tokens.size() != w) text::fail(l, "expected " + std::to_string(w) + " tile indices");
    for (std::size_t x = 0; x < w; ++x)
      cells.at(x, h - 1 - r) = static_cast<TileIndex>(text::parse_uint(l, l.tokens[x]));
  }
  if (kind == "rect") return Tiling{std::move(cells)};
  return TorusTiling{std::move(cells)};
}

namespace {

std::string write_index_grid(const char* kind, const Grid<TileIndex>& g) {
  std::ostringstream out;
  out << "tiling " << kind << ' ' << g.width() << ' ' << g.height() << '\n';
  for (std::size_t r = 0; r < g.height(); ++r) {
    const std::size_t y = g.height() - 1 - r;
    for (std::size_t x = 0; x < g.width(); ++x) out << (x ? " " : "") << g.at(x, y);
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string write_tiling(const Tiling& tiling) { return write_index_grid("rect", tiling.cells); }
std::string write_tiling(const TorusTiling& tiling) { return write_index_grid("torus", tiling.cells); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace shiftforge
