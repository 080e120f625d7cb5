#pragma once

// Ordered, named generating tuples and the generator file format:
//
//   # cover group of the search
//   degree 8
//   g1 = (1,2)
//   g2 = (1,2,3,4,5,6,7,8)
//
// '#' starts a comment, blank lines are ignored, the degree line comes first.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "shortwords/errors.hpp"
#include "shortwords/perm.hpp"

namespace shortwords {

inline std::string default_gen_name(int i) { return "$." + std::to_string(i); }

struct GeneratorSet {
  int degree = 1;
  std::vector<Perm> gens;
  std::vector<std::string> names;

  /// Builds a set with validated degrees; missing names default to
  /// "$.1", "$.2", ...
  static GeneratorSet make(int degree, std::vector<Perm> gens,
                           std::vector<std::string> names = {}) {
    if (degree < 1)
      throw PreconditionError(errc::degree_mismatch, "degree must be positive");
    for (const Perm& g : gens)
      if (g.degree() != degree)
        throw PreconditionError(errc::degree_mismatch,
                                "generator degree " + std::to_string(g.degree()) +
                                    " does not match set degree " +
                                    std::to_string(degree));
    if (names.empty()) {
      names.reserve(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i)
        names.push_back(default_gen_name(static_cast<int>(i) + 1));
    } else if (names.size() != gens.size()) {
      throw PreconditionError(errc::arity_mismatch,
                              "need one name per generator");
    }
    return GeneratorSet{degree, std::move(gens), std::move(names)};
  }

  int arity() const noexcept { return static_cast<int>(gens.size()); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline GeneratorSet parse_generator_file(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<std::string> names;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = line;
    if (auto hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;

    if (degree == 0) {
      std::istringstream hdr{std::string(s)};
      std::string kw;
      long n = 0;
      if (!(hdr >> kw >> n) || kw != "degree" || n < 1 || !(hdr >> std::ws).eof())
        throw ParseError(errc::syntax_error, "expected 'degree <n>'", line_no, 1);
      degree = static_cast<int>(n);
      continue;
    }

    auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(errc::syntax_error, "expected '<name> = <cycles>'",
                       line_no, 1);
    std::string_view name = detail::trim(s.substr(0, eq));
    if (name.empty() || name.find_first_of(" \t") != std::string_view::npos)
      throw ParseError(errc::syntax_error, "generator name must be one token",
                       line_no, 1);
    std::string_view rhs = s.substr(eq + 1);
    // column of the first character after '=' within the original line
    std::size_t rhs_col = static_cast<std::size_t>(rhs.data() - line.data()) + 1;
    try {
      gens.push_back(parse_perm(rhs, degree));
    } catch (const ParseError& e) {
      throw ParseError(e.code(), e.what(), line_no, rhs_col + e.column() - 1);
    }
    names.emplace_back(name);
  }

  if (degree == 0)
    throw ParseError(errc::syntax_error, "missing 'degree <n>' line", line_no, 1);
  return GeneratorSet::make(degree, std::move(gens), std::move(names));
}

inline GeneratorSet parse_generator_file_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_generator_file(in);
}

inline GeneratorSet load_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(errc::syntax_error, "cannot open '" + path + "'", 0, 0);
  return parse_generator_file(in);
}

inline std::string format_generator_file(const GeneratorSet& gs) {
  std::string out = "degree " + std::to_string(gs.degree) + "\n";
  for (int i = 0; i < gs.arity(); ++i)
    out += gs.names[static_cast<std::size_t>(i)] + " = " +
           format_perm(gs.gens[static_cast<std::size_t>(i)]) + "\n";
  return out;
}

}  // namespace shortwords
