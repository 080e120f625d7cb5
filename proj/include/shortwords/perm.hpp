#pragma once

// Permutations of {1..degree} stored as image tables.  Composition is
// left-to-right throughout the toolkit: (p * q) applies p first, then q,
// so i^(p*q) = (i^p)^q.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shortwords/errors.hpp"

namespace shortwords {

class Perm {
 public:
  /// Identity permutation on {1..degree}.
  explicit Perm(int degree) : img_(static_cast<std::size_t>(check_degree(degree))) {
    std::iota(img_.begin(), img_.end(), 1);
  }

  static Perm identity(int degree) { return Perm(degree); }

  /// Builds a permutation from a 1-based image table; images[i-1] is the
  /// image of point i.  Validates that the table is a bijection.
  static Perm from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    check_degree(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images) {
      if (v < 1 || v > n)
        throw PreconditionError(errc::point_out_of_range,
                                "image " + std::to_string(v) +
                                    " outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v - 1)])
        throw PreconditionError(errc::repeated_point,
                                "point " + std::to_string(v) +
                                    " appears twice in image table");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    Perm p(n);
    p.img_ = std::move(images);
    return p;
  }

  int degree() const noexcept { return static_cast<int>(img_.size()); }

  /// Image of a 1-based point.
  int operator()(int point) const { return img_[static_cast<std::size_t>(point - 1)]; }

  const std::vector<int>& images() const noexcept { return img_; }

  bool is_identity() const noexcept {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
  }

  /// Smallest moved point, or 0 for the identity.
  int min_moved_point() const noexcept {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<std::size_t>(i)] != i + 1) return i + 1;
    return 0;
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;

  friend bool operator<(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.img_ < b.img_;
  }

  friend Perm compose(const Perm& p, const Perm& q);
  friend Perm inverse(const Perm& p);

 private:
  struct raw_tag {};
  Perm(std::vector<int> images, raw_tag) : img_(std::move(images)) {}

  static int check_degree(int degree) {
    if (degree < 1)
      throw PreconditionError(errc::degree_mismatch,
                              "degree must be positive, got " +
                                  std::to_string(degree));
    return degree;
  }

  std::vector<int> img_;
};

inline void require_same_degree(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw PreconditionError(errc::degree_mismatch,
                            "degree mismatch: " + std::to_string(a.degree()) +
                                " vs " + std::to_string(b.degree()));
}

/// Apply p first, then q.
inline Perm compose(const Perm& p, const Perm& q) {
  require_same_degree(p, q);
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i)
    img[static_cast<std::size_t>(i - 1)] = q(p(i));
  return Perm(std::move(img), Perm::raw_tag{});
}

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

inline Perm inverse(const Perm& p) {
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i)
    img[static_cast<std::size_t>(p(i) - 1)] = i;
  return Perm(std::move(img), Perm::raw_tag{});
}

/// g^{-1} * x * g.
inline Perm conjugate(const Perm& x, const Perm& g) {
  return compose(compose(inverse(g), x), g);
}

inline Perm power(const Perm& p, long long n) {
  Perm base = n < 0 ? inverse(p) : p;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                               : static_cast<unsigned long long>(n);
  Perm acc = Perm::identity(p.degree());
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

/// Nontrivial cycles, each rotated to start at its least point, sorted by
/// that least point.
inline std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)] || p(i) == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[static_cast<std::size_t>(j - 1)]) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      cyc.push_back(j);
      j = p(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

/// Multiset of nontrivial cycle lengths, descending; equal cycle types are
/// necessary for conjugacy in any permutation group.
inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> t;
  for (const auto& c : cycles(p)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

inline long long perm_order(const Perm& p) {
  long long o = 1;
  for (const auto& c : cycles(p)) o = std::lcm(o, static_cast<long long>(c.size()));
  return o;
}

inline std::string format_perm(const Perm& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

/// Parses disjoint-cycle notation over 1..degree; "()" and "id" denote the
/// identity.  Whitespace is tolerated anywhere between tokens.
inline Perm parse_perm(std::string_view text, int degree) {
  if (degree < 1)
    throw PreconditionError(errc::degree_mismatch, "degree must be positive");
  std::size_t pos = 0;
  auto col = [&]() { return pos + 1; };
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
    skip_ws();
    if (pos != text.size())
      throw ParseError(errc::syntax_error, "trailing characters after 'id'", 1, col());
    return Perm::identity(degree);
  }

  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  bool any_cycle = false;

  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError(errc::syntax_error, "expected '('", 1, col());
    ++pos;
    skip_ws();
    std::vector<int> cyc;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()" — empty cycle contributes nothing
    } else {
      for (;;) {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw ParseError(errc::syntax_error, "expected point number", 1, col());
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + (text[pos] - '0');
          if (v > degree)
            throw ParseError(errc::point_out_of_range,
                             "point " + std::to_string(v) + " exceeds degree " +
                                 std::to_string(degree),
                             1, col());
          ++pos;
        }
        if (v < 1)
          throw ParseError(errc::point_out_of_range, "points are 1-based", 1, col());
        if (used[static_cast<std::size_t>(v - 1)])
          throw ParseError(errc::repeated_point,
                           "point " + std::to_string(v) + " occurs twice", 1, col());
        used[static_cast<std::size_t>(v - 1)] = true;
        cyc.push_back(static_cast<int>(v));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw ParseError(errc::syntax_error, "expected ',' or ')'", 1, col());
      }
    }
    any_cycle = true;
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
      img[static_cast<std::size_t>(cyc[i] - 1)] = cyc[i + 1];
    if (cyc.size() > 1) img[static_cast<std::size_t>(cyc.back() - 1)] = cyc.front();
    skip_ws();
  }

  if (!any_cycle)
    throw ParseError(errc::syntax_error, "empty permutation text", 1, col());
  return Perm::from_images(std::move(img));
}

}  // namespace shortwords

template <>
struct std::hash<shortwords::Perm> {
  std::size_t operator()(const shortwords::Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};
