#pragma once

// Numerical words and the breadth-first word tree.  A word [1,4,4,4,2,3,3]
// over generators g1..g4 stands for the product g1*g4^3*g2*g3^2; words are
// ordered shortlex (by length, then left-to-right by index).

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "shortwords/errors.hpp"
#include "shortwords/gens.hpp"
#include "shortwords/perm.hpp"

namespace shortwords {

using NumericalWord = std::vector<int>;  // 1-based generator indices

/// A word together with an outer exponent; evaluates to
/// word_to_elt(word)^exponent.
struct PoweredWord {
  NumericalWord word;
  long long exponent = 1;

  friend bool operator==(const PoweredWord&, const PoweredWord&) = default;
};

/// The flat leveled word list: every word built so far plus the 1-based
/// inclusive [window_start, window_end] span of the newest level.  The word
/// tree itself is never materialized.
struct WordFrontier {
  std::vector<NumericalWord> words;
  std::size_t window_start = 0;
  std::size_t window_end = 0;
  std::size_t stored_indices = 0;

  bool empty() const noexcept { return words.empty(); }
};

/// Cap on the total number of stored word indices before enum_words fails
/// with FrontierExhausted instead of thrashing.
inline constexpr std::size_t default_frontier_capacity = 20'000'000;

/// Descends one level: appends, for each window word in order, its k
/// children (suffix 1..k) and moves the window onto the appended block.  An
/// empty frontier yields the k length-1 words.
inline WordFrontier enum_words(WordFrontier f, int arity,
                               std::size_t capacity = default_frontier_capacity) {
  if (arity < 1)
    throw PreconditionError(errc::arity_mismatch, "arity must be at least 1");
  const std::size_t k = static_cast<std::size_t>(arity);

  if (f.empty()) {
    if (k > capacity)
      throw LimitError(errc::frontier_exhausted,
                       "frontier capacity exceeded at the first level");
    f.words.reserve(k);
    for (int i = 1; i <= arity; ++i) f.words.push_back({i});
    f.window_start = 1;
    f.window_end = k;
    f.stored_indices = k;
    return f;
  }

  std::size_t grow = 0;
  for (std::size_t j = f.window_start; j <= f.window_end; ++j) {
    const NumericalWord& w = f.words[j - 1];
    for (int letter : w)
      if (letter < 1 || letter > arity)
        throw PreconditionError(errc::arity_mismatch,
                                "window word contains index " +
                                    std::to_string(letter) +
                                    " outside 1.." + std::to_string(arity));
    grow += k * (w.size() + 1);
  }
  if (f.stored_indices + grow > capacity)
    throw LimitError(errc::frontier_exhausted,
                     "frontier capacity of " + std::to_string(capacity) +
                         " indices exceeded");

  const std::size_t old_size = f.words.size();
  f.words.reserve(old_size + (f.window_end - f.window_start + 1) * k);
  for (std::size_t j = f.window_start; j <= f.window_end; ++j) {
    for (int i = 1; i <= arity; ++i) {
      NumericalWord child = f.words[j - 1];
      child.push_back(i);
      f.words.push_back(std::move(child));
    }
  }
  f.window_start = old_size + 1;
  f.window_end = f.words.size();
  f.stored_indices += grow;
  return f;
}

/// Left-to-right product of the indexed generators; the empty word is the
/// identity.
inline Perm word_to_elt(const GeneratorSet& gens, const NumericalWord& word) {
  Perm e = Perm::identity(gens.degree);
  for (int letter : word) {
    if (letter < 1 || letter > gens.arity())
      throw PreconditionError(errc::index_out_of_range,
                              "word index " + std::to_string(letter) +
                                  " outside 1.." + std::to_string(gens.arity()));
    e = compose(e, gens.gens[static_cast<std::size_t>(letter - 1)]);
  }
  return e;
}

inline Perm eval_powered_word(const GeneratorSet& gens, const PoweredWord& pw) {
  return power(word_to_elt(gens, pw.word), pw.exponent);
}

/// Shortlex: shorter words first, ties broken at the first differing index.
inline std::strong_ordering lex_compare(const NumericalWord& u,
                                        const NumericalWord& w) {
  if (u.size() != w.size())
    return u.size() < w.size() ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != w[i])
      return u[i] < w[i] ? std::strong_ordering::less
                         : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Renders a word with run-length power notation: [1,4,4,4,2,3,3] becomes
/// "$.1*$.4^3*$.2*$.3^2".  An outer exponent > 1 wraps the word in
/// parentheses unless it is a single letter ("g2^5", not "(g2)^5"); the
/// empty word renders as "Id($)".
inline std::string format_word(const NumericalWord& word,
                               std::span<const std::string> names,
                               long long exponent = 1) {
  if (word.empty()) return "Id($)";
  std::string body;
  std::size_t i = 0;
  while (i < word.size()) {
    int letter = word[i];
    if (letter < 1 || static_cast<std::size_t>(letter) > names.size())
      throw PreconditionError(errc::index_out_of_range,
                              "word index " + std::to_string(letter) +
                                  " has no name");
    std::size_t run = 1;
    while (i + run < word.size() && word[i + run] == letter) ++run;
    if (!body.empty()) body += '*';
    body += names[static_cast<std::size_t>(letter - 1)];
    if (run > 1) body += '^' + std::to_string(run);
    i += run;
  }
  if (exponent == 1) return body;
  if (word.size() == 1) return body + '^' + std::to_string(exponent);
  return '(' + body + ")^" + std::to_string(exponent);
}

inline std::string format_word(const PoweredWord& pw,
                               std::span<const std::string> names) {
  return format_word(pw.word, names, pw.exponent);
}

}  // namespace shortwords
