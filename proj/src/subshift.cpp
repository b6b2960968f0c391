#include "shiftforge/subshift.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>

#include "text_util.hpp"

namespace shiftforge {

AllWordsMinLength::AllWordsMinLength(Alphabet alphabet, std::size_t min_len)
    : alphabet_(std::move(alphabet)), digits_(min_len == 0 ? 1 : min_len, 0) {
  if (alphabet_.size() == 0) throw InvalidInput("stream alphabet is empty");
}

std::optional<std::string> AllWordsMinLength::next() {
  std::string word;
  word.reserve(digits_.size());
  for (std::size_t d : digits_) word.push_back(alphabet_[d]);
  // Advance in length-lex order.
  std::size_t i = digits_.size();
  while (i > 0) {
    --i;
    if (++digits_[i] < alphabet_.size()) return word;
    digits_[i] = 0;
  }
  digits_.assign(digits_.size() + 1, 0);
  return word;
}

namespace {

void check_word(const Alphabet& alphabet, std::string_view word) {
  if (word.empty()) throw InvalidInput("forbidden words must be nonempty");
  for (char c : word)
    if (!alphabet.contains(c)) throw InvalidInput("word '" + std::string(word) + "' uses a letter outside the alphabet");
}

void check_letters(const Alphabet& alphabet, std::string_view s) {
  for (char c : s)
    if (!alphabet.contains(c)) throw InvalidInput(std::string("letter '") + c + "' is not in the alphabet");
}

}  // namespace

Subshift1dSpec Subshift1dSpec::with_words(Alphabet alphabet, std::vector<std::string> words) {
  if (alphabet.size() == 0) throw InvalidInput("subshift alphabet is empty");
  for (const std::string& w : words) check_word(alphabet, w);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return Subshift1dSpec(std::move(alphabet), ExplicitWords{std::move(words)});
}

Subshift1dSpec Subshift1dSpec::with_stream(Alphabet alphabet, StreamSource source) {
  if (alphabet.size() == 0) throw InvalidInput("subshift alphabet is empty");
  if (!source.open) throw InvalidInput("stream source has no generator");
  return Subshift1dSpec(std::move(alphabet), std::move(source));
}

StreamSource make_stream_source(const Alphabet& alphabet, const std::string& generator,
                                const std::vector<std::string>& params) {
  if (generator == "all_words_min_len") {
    if (params.size() != 1) throw InvalidInput("all_words_min_len takes one parameter <L>");
    std::size_t len = 0;
    const auto& p = params[0];
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), len);
    if (ec != std::errc() || ptr != p.data() + p.size() || len == 0)
      throw InvalidInput("all_words_min_len needs a positive length");
    return StreamSource{"all_words_min_len " + p,
                        [alphabet, len] { return std::make_unique<AllWordsMinLength>(alphabet, len); }};
  }
  throw InvalidInput("unknown stream generator '" + generator + "'");
}

Subshift1dSpec parse_subshift(std::string_view contents) {
  const auto lines = text::content_lines(contents);
  if (lines.empty()) throw ParseError(1, 1, "missing 'subshift' header");
  const auto& head = lines[0];
  text::expect_keyword(head, "subshift");
  text::expect_tokens(head, 2, "subshift alphabet=<comma-list>");
  const Alphabet alphabet(text::parse_letter_list(head, head.tokens[1], text::key_value(head, head.tokens[1], "alphabet")));

  std::vector<std::string> words;
  std::optional<StreamSource> stream;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const std::string_view kw = l.tokens[0].text;
    if (kw == "forbid") {
      text::expect_tokens(l, 2, "forbid <word>");
      if (stream) text::fail(l, "cannot mix 'forbid' and 'stream'");
      for (std::size_t k = 0; k < l.tokens[1].text.size(); ++k)
        if (!alphabet.contains(l.tokens[1].text[k]))
          throw ParseError(l.number, l.tokens[1].column + k, "letter outside the alphabet");
      words.emplace_back(l.tokens[1].text);
    } else if (kw == "stream") {
      if (l.tokens.size() < 2) text::fail(l, "expected 'stream <generator> <params>'");
      if (stream || !words.empty()) text::fail(l, "only one source per subshift");
      std::vector<std::string> params;
      for (std::size_t k = 2; k < l.tokens.size(); ++k) params.emplace_back(l.tokens[k].text);
      try {
        stream = make_stream_source(alphabet, std::string(l.tokens[1].text), params);
      } catch (const InvalidInput& e) {
        text::fail(l, l.tokens[1], e.what());
      }
    } else {
      text::fail(l, "expected 'forbid' or 'stream'");
    }
  }
  if (stream) return Subshift1dSpec::with_stream(alphabet, std::move(*stream));
  return Subshift1dSpec::with_words(alphabet, std::move(words));
}

MatchAutomaton MatchAutomaton::build(const Alphabet& alphabet, std::vector<std::string> words) {
  if (alphabet.size() == 0) throw InvalidInput("matcher alphabet is empty");
  for (const std::string& w : words) check_word(alphabet, w);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  MatchAutomaton m;
  m.alphabet_ = alphabet;
  m.words_ = std::move(words);
  const std::size_t a = alphabet.size();

  // Trie.
  std::vector<std::int32_t> go(a, -1);
  m.terminal_word_.push_back(-1);
  for (std::size_t wi = 0; wi < m.words_.size(); ++wi) {
    std::int32_t s = 0;
    for (char c : m.words_[wi]) {
      const std::size_t li = alphabet.index_of(c);
      if (go[static_cast<std::size_t>(s) * a + li] < 0) {
        go[static_cast<std::size_t>(s) * a + li] = static_cast<std::int32_t>(m.terminal_word_.size());
        m.terminal_word_.push_back(-1);
        go.resize(go.size() + a, -1);
      }
      s = go[static_cast<std::size_t>(s) * a + li];
    }
    m.terminal_word_[static_cast<std::size_t>(s)] = static_cast<std::int32_t>(wi);
  }

  // Breadth-first failure links; missing edges borrow the failure target's.
  const std::size_t n = m.terminal_word_.size();
  m.fail_.assign(n, 0);
  m.output_link_.assign(n, -1);
  m.delta_ = go;
  std::deque<std::int32_t> queue;
  for (std::size_t li = 0; li < a; ++li) {
    std::int32_t& t = m.delta_[li];
    if (t < 0) t = 0;
    else queue.push_back(t);
  }
  while (!queue.empty()) {
    const std::int32_t s = queue.front();
    queue.pop_front();
    const std::int32_t f = m.fail_[static_cast<std::size_t>(s)];
    m.output_link_[static_cast<std::size_t>(s)] =
        m.terminal_word_[static_cast<std::size_t>(f)] >= 0 ? f : m.output_link_[static_cast<std::size_t>(f)];
    for (std::size_t li = 0; li < a; ++li) {
      std::int32_t& t = m.delta_[static_cast<std::size_t>(s) * a + li];
      const std::int32_t via_fail = m.delta_[static_cast<std::size_t>(f) * a + li];
      if (t < 0) {
        t = via_fail;
      } else {
        m.fail_[static_cast<std::size_t>(t)] = via_fail;
        queue.push_back(t);
      }
    }
  }
  return m;
}

template <typename Visit>
void MatchAutomaton::scan(std::string_view s, Visit&& visit) const {
  const std::size_t a = alphabet_.size();
  std::int32_t state = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    state = delta_[static_cast<std::size_t>(state) * a + alphabet_.index_of(s[i])];
    std::int32_t hit = terminal_word_[static_cast<std::size_t>(state)] >= 0 ? state
                                                                           : output_link_[static_cast<std::size_t>(state)];
    while (hit >= 0) {
      const auto wi = static_cast<std::size_t>(terminal_word_[static_cast<std::size_t>(hit)]);
      visit(Match{wi, i + 1 - words_[wi].size()});
      hit = output_link_[static_cast<std::size_t>(hit)];
    }
  }
}

std::optional<Match> MatchAutomaton::first_match(std::string_view s) const {
  std::optional<Match> best;
  scan(s, [&](const Match& m) {
    if (!best || m.position < best->position ||
        (m.position == best->position && words_[m.word].size() < words_[best->word].size()))
      best = m;
  });
  return best;
}

std::vector<Match> MatchAutomaton::all_matches(std::string_view s) const {
  std::vector<Match> out;
  scan(s, [&](const Match& m) { out.push_back(m); });
  return out;
}

std::string to_string(SequenceVerdict::Kind kind) {
  switch (kind) {
    case SequenceVerdict::Kind::kClean: return "CLEAN";
    case SequenceVerdict::Kind::kViolation: return "VIOLATION";
    case SequenceVerdict::Kind::kBudgetExhaustedClean: return "BUDGET_EXHAUSTED_CLEAN";
  }
  return "CLEAN";
}

namespace {

struct DrawnWords {
  std::vector<std::string> words;  // in enumeration order
  bool complete = true;            // the whole forbidden set was drawn
};

DrawnWords draw_words(const Subshift1dSpec& spec, std::uint64_t budget) {
  DrawnWords out;
  if (spec.is_explicit()) {
    const auto& all = spec.explicit_words().words;
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(budget, all.size()));
    out.words.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
    out.complete = n == all.size();
    return out;
  }
  auto stream = spec.stream().open();
  out.complete = false;
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto w = stream->next();
    if (!w) {
      out.complete = true;
      break;
    }
    check_word(spec.alphabet(), *w);
    out.words.push_back(std::move(*w));
  }
  // A finite stream that ends exactly at the budget counts as exhausted.
  if (!out.complete && !spec.is_explicit() && !stream->next()) out.complete = true;
  return out;
}

SequenceVerdict check_drawn(const Subshift1dSpec& spec, const DrawnWords& drawn, std::string_view s,
                            std::size_t period) {
  SequenceVerdict v;
  v.words_examined = drawn.words.size();
  std::vector<std::string> usable;
  for (const std::string& w : drawn.words)
    if (w.size() <= s.size()) usable.push_back(w);
  if (!usable.empty()) {
    const MatchAutomaton m = MatchAutomaton::build(spec.alphabet(), std::move(usable));
    if (const auto hit = m.first_match(s)) {
      v.kind = SequenceVerdict::Kind::kViolation;
      v.word = m.words()[hit->word];
      v.position = period ? hit->position % period : hit->position;
      return v;
    }
  }
  v.kind = drawn.complete ? SequenceVerdict::Kind::kClean : SequenceVerdict::Kind::kBudgetExhaustedClean;
  return v;
}

}  // namespace

SequenceVerdict check_sequence(const Subshift1dSpec& spec, std::string_view s, std::uint64_t budget) {
  check_letters(spec.alphabet(), s);
  return check_drawn(spec, draw_words(spec, budget), s, 0);
}

SftSpec lift_1d(const Subshift1dSpec& spec) {
  if (!spec.is_explicit())
    throw Unsupported("vertical lift needs an explicit finite word list; stream sources are not of finite type");
  std::vector<Pattern> forbidden;
  const Alphabet& a = spec.alphabet();
  for (Letter lower : a.letters()) {
    for (Letter upper : a.letters()) {
      if (lower == upper) continue;
      Pattern p(1, 2);
      p.at(0, 0) = lower;
      p.at(0, 1) = upper;
      forbidden.push_back(std::move(p));
    }
  }
  for (const std::string& w : spec.explicit_words().words) forbidden.push_back(pattern_from_rows({w}));
  return SftSpec(a, std::move(forbidden));
}

namespace {

template <typename At>
bool occurs_at(const Pattern& p, std::size_t x, std::size_t y, At&& at) {
  for (std::size_t py = 0; py < p.height(); ++py)
    for (std::size_t px = 0; px < p.width(); ++px)
      if (at(x + px, y + py) != p.at(px, py)) return false;
  return true;
}

WindowVerdict scan_window(const SftSpec& spec, const Window& w, bool wrap) {
  for (Letter c : w.cells()) {
    if (!spec.alphabet().contains(c)) throw InvalidInput(std::string("window letter '") + c + "' is not in the alphabet");
  }
  const auto& pats = spec.forbidden();
  auto at = [&](std::size_t x, std::size_t y) { return w.at(x % w.width(), y % w.height()); };
  for (std::size_t y = 0; y < w.height(); ++y) {
    for (std::size_t x = 0; x < w.width(); ++x) {
      for (std::size_t i = 0; i < pats.size(); ++i) {
        if (!wrap && (x + pats[i].width() > w.width() || y + pats[i].height() > w.height())) continue;
        if (occurs_at(pats[i], x, y, at)) return WindowVerdict{false, i, x, y};
      }
    }
  }
  return WindowVerdict{};
}

}  // namespace

WindowVerdict check_window(const SftSpec& spec, const Window& window) { return scan_window(spec, window, false); }

WindowVerdict check_torus_window(const SftSpec& spec, const Window& window) { return scan_window(spec, window, true); }

LiftedVerdict check_lifted_window(const Subshift1dSpec& spec, const Window& window, bool cyclic,
                                  std::uint64_t budget) {
  for (Letter c : window.cells()) check_letters(spec.alphabet(), std::string_view(&c, 1));
  LiftedVerdict out;
  for (std::size_t y = 1; y < window.height(); ++y) {
    for (std::size_t x = 0; x < window.width(); ++x) {
      if (window.at(x, y) != window.at(x, y - 1)) {
        out.kind = SequenceVerdict::Kind::kViolation;
        out.detail = "vertical mismatch at x=" + std::to_string(x) + " y=" + std::to_string(y - 1);
        return out;
      }
    }
  }
  std::string row;
  for (std::size_t x = 0; x < window.width(); ++x) row.push_back(window.at(x, 0));

  const DrawnWords drawn = draw_words(spec, budget);
  std::string subject = row;
  if (cyclic && !row.empty()) {
    std::size_t longest = 0;
    for (const auto& w : drawn.words) longest = std::max(longest, w.size());
    while (subject.size() < row.size() + longest - (longest ? 1 : 0)) subject += row;
  }
  const SequenceVerdict v = check_drawn(spec, drawn, subject, cyclic ? row.size() : 0);
  out.kind = v.kind;
  if (v.kind == SequenceVerdict::Kind::kViolation)
    out.detail = "word " + v.word + " at x=" + std::to_string(v.position) + " (every row)";
  else
    out.detail = std::to_string(v.words_examined) + " words examined";
  return out;
}

}  // namespace shiftforge
