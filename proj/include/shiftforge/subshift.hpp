#pragma once

// One-dimensional subshifts given by forbidden words, finite-window checks,
// and the vertical lift of a 1D subshift to a 2D subshift of finite type.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shiftforge/core.hpp"

namespace shiftforge {

// Pull-based word enumerator. Single consumer; not thread-safe.
class WordStream {
 public:
  virtual ~WordStream() = default;
  // Next word, or nullopt when the enumeration is finite and exhausted.
  virtual std::optional<std::string> next() = 0;
};

// All words of length >= min_len over the alphabet, in length-lex order.
class AllWordsMinLength : public WordStream {
 public:
  AllWordsMinLength(Alphabet alphabet, std::size_t min_len);
  std::optional<std::string> next() override;

 private:
  Alphabet alphabet_;
  std::vector<std::size_t> digits_;
};

struct ExplicitWords {
  std::vector<std::string> words;  // sorted, duplicate-free
};

struct StreamSource {
  std::string description;  // e.g. "all_words_min_len 5"
  std::function<std::unique_ptr<WordStream>()> open;
};

class Subshift1dSpec {
 public:
  // Words are deduplicated and sorted; every word must be nonempty and
  // drawn from the alphabet.
  static Subshift1dSpec with_words(Alphabet alphabet, std::vector<std::string> words);
  static Subshift1dSpec with_stream(Alphabet alphabet, StreamSource source);

  const Alphabet& alphabet() const { return alphabet_; }
  bool is_explicit() const { return std::holds_alternative<ExplicitWords>(source_); }
  const ExplicitWords& explicit_words() const { return std::get<ExplicitWords>(source_); }
  const StreamSource& stream() const { return std::get<StreamSource>(source_); }

 private:
  Subshift1dSpec(Alphabet alphabet, std::variant<ExplicitWords, StreamSource> source)
      : alphabet_(std::move(alphabet)), source_(std::move(source)) {}

  Alphabet alphabet_;
  std::variant<ExplicitWords, StreamSource> source_;
};

// Built-in stream generators by name; throws InvalidInput for unknown
// names or bad parameters.
StreamSource make_stream_source(const Alphabet& alphabet, const std::string& generator,
                                const std::vector<std::string>& params);

// subshift alphabet=<comma-list>, then `forbid <word>` lines or a single
// `stream <generator> <params...>` line.
Subshift1dSpec parse_subshift(std::string_view text);

struct Match {
  std::size_t word = 0;      // index into MatchAutomaton::words()
  std::size_t position = 0;  // start of the occurrence
  friend bool operator==(const Match&, const Match&) = default;
};

// Multi-pattern matcher with failure links (Aho-Corasick), compiled to a
// full transition table over the alphabet.
class MatchAutomaton {
 public:
  // Throws InvalidInput on an empty word or a letter outside the alphabet.
  static MatchAutomaton build(const Alphabet& alphabet, std::vector<std::string> words);

  const std::vector<std::string>& words() const { return words_; }
  std::size_t state_count() const { return fail_.size(); }

  // Earliest occurrence by (start, length); nullopt when nothing occurs.
  std::optional<Match> first_match(std::string_view s) const;
  // Every occurrence, ordered by end position, longest word first.
  std::vector<Match> all_matches(std::string_view s) const;

  friend bool operator==(const MatchAutomaton&, const MatchAutomaton&) = default;

 private:
  template <typename Visit>
  void scan(std::string_view s, Visit&& visit) const;

  Alphabet alphabet_;
  std::vector<std::string> words_;
  std::vector<std::int32_t> delta_;           // state * |A| + letter -> state
  std::vector<std::int32_t> fail_;
  std::vector<std::int32_t> output_link_;     // next accepting state on the suffix chain, or -1
  std::vector<std::int32_t> terminal_word_;   // word ending exactly here, or -1
};

inline constexpr std::uint64_t kDefaultWordBudget = 10'000;

struct SequenceVerdict {
  enum class Kind { kClean, kViolation, kBudgetExhaustedClean };
  Kind kind = Kind::kClean;
  std::string word;
  std::size_t position = 0;
  std::uint64_t words_examined = 0;
};

std::string to_string(SequenceVerdict::Kind kind);

// Checks s against the first min(budget, |F|) forbidden words.
SequenceVerdict check_sequence(const Subshift1dSpec& spec, std::string_view s,
                               std::uint64_t budget = kDefaultWordBudget);

// Vertical lift of a finite-type 1D subshift: forbids every vertical pair of
// unequal letters (sorted by lower letter, then upper) followed by every
// word as a one-row pattern. Throws Unsupported for stream sources.
SftSpec lift_1d(const Subshift1dSpec& spec);

struct WindowVerdict {
  bool clean = true;
  std::size_t pattern_index = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  friend bool operator==(const WindowVerdict&, const WindowVerdict&) = default;
};

// First forbidden occurrence by (y, x, pattern_index), with the pattern's
// bottom-left cell at (x, y).
WindowVerdict check_window(const SftSpec& spec, const Window& window);

// Same check on a torus: patterns may wrap around both edges.
WindowVerdict check_torus_window(const SftSpec& spec, const Window& window);

// Membership of a window in the lift of spec: columns constant and each row
// passes check_sequence. `cyclic` treats rows as periods of bi-infinite
// sequences.
struct LiftedVerdict {
  SequenceVerdict::Kind kind = SequenceVerdict::Kind::kClean;
  std::string detail;
};

LiftedVerdict check_lifted_window(const Subshift1dSpec& spec, const Window& window, bool cyclic,
                                  std::uint64_t budget = kDefaultWordBudget);

}  // namespace shiftforge
