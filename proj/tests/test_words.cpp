#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shortwords/words.hpp"

using namespace shortwords;
using oracle::P;

namespace {

// Test-only parser for rendered words: inverse of format_word for a given
// name list.  Understands "Id($)", "name", "name^3", '*' separators and an
// outer "(...)^e".  A bare single token "g2^5" parses canonically as the
// one-letter word with exponent 5.
PoweredWord parse_rendered(const std::string& text,
                           const std::vector<std::string>& names) {
  if (text == "Id($)") return {{}, 1};
  std::string body = text;
  long long exponent = 1;
  if (!body.empty() && body.front() == '(') {
    auto close = body.rfind(")^");
    REQUIRE(close != std::string::npos);
    exponent = std::stoll(body.substr(close + 2));
    body = body.substr(1, close - 1);
  }
  const bool single_token =
      exponent == 1 && body.find('*') == std::string::npos;
  PoweredWord out{{}, exponent};
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto star = body.find('*', pos);
    std::string token = body.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? body.size() : star + 1;
    long long count = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      count = std::stoll(token.substr(caret + 1));
      token = token.substr(0, caret);
    }
    int index = -1;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == token) index = static_cast<int>(i) + 1;
    REQUIRE(index > 0);
    if (single_token && count > 1) {
      out.word.push_back(index);
      out.exponent = count;
    } else {
      for (long long c = 0; c < count; ++c) out.word.push_back(index);
    }
  }
  return out;
}

// "g2^5" is the rendering of both ([2], 5) and ([2,2,2,2,2], 1); such pairs
// round-trip up to evaluation, everything else round-trips exactly.
bool rendering_is_ambiguous(const PoweredWord& pw) {
  if (pw.word.size() < 2 || pw.exponent != 1) return false;
  return std::all_of(pw.word.begin(), pw.word.end(),
                     [&](int v) { return v == pw.word[0]; });
}

}  // namespace

TEST_CASE("enum_words reproduces the worked example", "[words]") {
  WordFrontier f;
  f.words = {{1, 3, 4}, {3, 3, 2}, {2, 1}, {4}};
  f.window_start = 2;
  f.window_end = 3;
  f.stored_indices = 9;

  WordFrontier out = enum_words(std::move(f), 4);
  std::vector<NumericalWord> expected = {
      {1, 3, 4},    {3, 3, 2},    {2, 1},       {4},
      {3, 3, 2, 1}, {3, 3, 2, 2}, {3, 3, 2, 3}, {3, 3, 2, 4},
      {2, 1, 1},    {2, 1, 2},    {2, 1, 3},    {2, 1, 4}};
  CHECK(out.words == expected);
  CHECK(out.window_start == 5);
  CHECK(out.window_end == 12);
}

TEST_CASE("enum_words base cases", "[words]") {
  WordFrontier f0 = enum_words({}, 3);
  CHECK(f0.words == std::vector<NumericalWord>{{1}, {2}, {3}});
  CHECK(f0.window_start == 1);
  CHECK(f0.window_end == 3);

  WordFrontier f1;
  f1.words = {{1}};
  f1.window_start = 1;
  f1.window_end = 1;
  f1.stored_indices = 1;
  WordFrontier out = enum_words(std::move(f1), 1);
  CHECK(out.words == std::vector<NumericalWord>{{1}, {1, 1}});
  CHECK(out.window_start == 2);
  CHECK(out.window_end == 2);
}

TEST_CASE("enum_words guards arity and capacity", "[words]") {
  WordFrontier f;
  f.words = {{5}};
  f.window_start = 1;
  f.window_end = 1;
  f.stored_indices = 1;
  CHECK_THROWS_AS(enum_words(std::move(f), 4), PreconditionError);

  WordFrontier tiny = enum_words({}, 2, 1000);
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 20; ++i) tiny = enum_words(std::move(tiny), 2, 1000);
      }(),
      LimitError);
}

TEST_CASE("enum_words grows level by level", "[words][property]") {
  std::mt19937 rng(7);
  for (int arity = 1; arity <= 4; ++arity) {
    WordFrontier f = enum_words({}, arity);
    std::size_t level_len = 1;
    for (int level = 2; level <= 5; ++level) {
      std::size_t window = f.window_end - f.window_start + 1;
      f = enum_words(std::move(f), arity);
      CHECK(f.window_end - f.window_start + 1 ==
            window * static_cast<std::size_t>(arity));
      ++level_len;
      for (std::size_t j = f.window_start; j <= f.window_end; ++j)
        CHECK(f.words[j - 1].size() == level_len);
      // the full list stays shortlex-sorted
      for (std::size_t j = 1; j < f.words.size(); ++j)
        CHECK(lex_compare(f.words[j - 1], f.words[j]) == std::strong_ordering::less);
    }
  }
  (void)rng;
}

TEST_CASE("word_to_elt evaluates left-to-right", "[words]") {
  auto gs3 = GeneratorSet::make(3, {P("(1,2)", 3), P("(1,2,3)", 3)});
  CHECK(word_to_elt(gs3, {1, 2, 2}) == P("(2,3)", 3));
  CHECK(word_to_elt(gs3, {}) == Perm::identity(3));

  auto gs8 = GeneratorSet::make(8, {P("(1,2)", 8), P("(1,2,3,4,5,6,7,8)", 8)});
  CHECK(word_to_elt(gs8, {1, 2, 2, 2, 2, 1, 2, 2, 2}) == P("(2,8,7,6,4,3)", 8));

  CHECK_THROWS_AS(word_to_elt(gs3, {3}), PreconditionError);
}

TEST_CASE("word_to_elt is a monoid homomorphism", "[words][property]") {
  auto gs = GeneratorSet::make(5, {P("(1,2)", 5), P("(1,2,3,4,5)", 5), P("(4,5)", 5)});
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    NumericalWord u, w;
    for (std::size_t i = rng() % 6; i-- > 0;) u.push_back(1 + static_cast<int>(rng() % 3));
    for (std::size_t i = rng() % 6; i-- > 0;) w.push_back(1 + static_cast<int>(rng() % 3));
    NumericalWord uw = u;
    uw.insert(uw.end(), w.begin(), w.end());
    CHECK(word_to_elt(gs, uw) == compose(word_to_elt(gs, u), word_to_elt(gs, w)));
  }
}

TEST_CASE("lex_compare is shortlex", "[words]") {
  CHECK(lex_compare({1}, {2}) == std::strong_ordering::less);
  CHECK(lex_compare({2}, {1, 1}) == std::strong_ordering::less);
  CHECK(lex_compare({1, 3}, {1, 2}) == std::strong_ordering::greater);
  CHECK(lex_compare({2, 1}, {2, 1}) == std::strong_ordering::equal);
}

TEST_CASE("lex_compare is a total order", "[words][property]") {
  std::mt19937 rng(31337);
  auto rand_word = [&] {
    NumericalWord w;
    for (std::size_t i = rng() % 5; i-- > 0;) w.push_back(1 + static_cast<int>(rng() % 3));
    return w;
  };
  for (int trial = 0; trial < 10000; ++trial) {
    NumericalWord a = rand_word(), b = rand_word(), c = rand_word();
    auto ab = lex_compare(a, b), ba = lex_compare(b, a);
    // antisymmetric and total
    if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
    if (ab == std::strong_ordering::equal) {
      CHECK(a == b);
      CHECK(ba == std::strong_ordering::equal);
    }
    // transitive
    if (ab != std::strong_ordering::greater &&
        lex_compare(b, c) != std::strong_ordering::greater)
      CHECK(lex_compare(a, c) != std::strong_ordering::greater);
  }
}

TEST_CASE("format_word renders run-length powers", "[words]") {
  std::vector<std::string> dollar{"$.1", "$.2", "$.3", "$.4"};
  CHECK(format_word({1, 4, 4, 4, 2, 3, 3}, dollar) == "$.1*$.4^3*$.2*$.3^2");

  std::vector<std::string> gnames{"g1", "g2"};
  CHECK(format_word({2, 1, 2, 2, 2, 2}, gnames, 5) == "(g2*g1*g2^4)^5");
  CHECK(format_word(NumericalWord{}, gnames) == "Id($)");
  CHECK(format_word({2}, gnames, 5) == "g2^5");
  CHECK(format_word({1, 2, 2, 2, 2, 1, 2, 2, 2}, gnames) == "g1*g2^4*g1*g2^3");
  CHECK_THROWS_AS(format_word({3}, gnames), PreconditionError);
}

TEST_CASE("format_word round-trips through a parser", "[words][property]") {
  std::vector<std::string> names{"g1", "g2", "g3"};
  auto gs = GeneratorSet::make(5, {P("(1,2)", 5), P("(1,2,3,4,5)", 5), P("(4,5)", 5)});
  std::mt19937 rng(555);
  for (int trial = 0; trial < 500; ++trial) {
    PoweredWord pw;
    for (std::size_t i = 1 + rng() % 7; i-- > 0;)
      pw.word.push_back(1 + static_cast<int>(rng() % 3));
    pw.exponent = 1 + static_cast<long long>(rng() % 9);
    std::string text = format_word(pw, names);
    PoweredWord back = parse_rendered(text, names);
    if (rendering_is_ambiguous(pw)) {
      CHECK(format_word(back, names) == text);
      CHECK(eval_powered_word(gs, back) == eval_powered_word(gs, pw));
    } else {
      CHECK(back == pw);
    }
  }
  CHECK(parse_rendered("Id($)", names) == PoweredWord{{}, 1});
}
