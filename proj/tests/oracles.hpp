#pragma once

// Brute-force oracles for the test suite.  Everything here works by plain
// closure enumeration and linear scans over raw permutation arithmetic, so
// it stays independent of the stabilizer-chain and word-search code paths it
// is used to check.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "shortwords/gens.hpp"
#include "shortwords/perm.hpp"

namespace oracle {

using shortwords::Perm;

inline Perm P(const std::string& cycles, int degree) {
  return shortwords::parse_perm(cycles, degree);
}

/// All elements of <gens> by breadth-first multiplication until closed.
inline std::vector<Perm> closure(int degree, const std::vector<Perm>& gens) {
  std::vector<Perm> elems{Perm::identity(degree)};
  std::set<Perm> seen{elems[0]};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& g : gens) {
      Perm c = compose(elems[i], g);
      if (seen.insert(c).second) elems.push_back(std::move(c));
    }
  return elems;
}

inline bool member(const std::vector<Perm>& elems, const Perm& x) {
  return std::find(elems.begin(), elems.end(), x) != elems.end();
}

/// Conjugation-orbit partition of a full element list; classes in order of
/// their first element.
inline std::vector<std::vector<Perm>> classes(const std::vector<Perm>& elems) {
  std::vector<std::vector<Perm>> out;
  std::set<Perm> seen;
  for (const Perm& x : elems) {
    if (seen.contains(x)) continue;
    std::vector<Perm> orbit{x};
    seen.insert(x);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const Perm& g : elems) {
        Perm c = shortwords::conjugate(orbit[i], g);
        if (seen.insert(c).second) orbit.push_back(std::move(c));
      }
    out.push_back(std::move(orbit));
  }
  return out;
}

inline std::vector<Perm> centralizer(const std::vector<Perm>& elems, const Perm& x) {
  std::vector<Perm> out;
  for (const Perm& g : elems)
    if (compose(g, x) == compose(x, g)) out.push_back(g);
  return out;
}

inline bool conjugate_in(const std::vector<Perm>& elems, const Perm& x, const Perm& y) {
  for (const Perm& g : elems)
    if (shortwords::conjugate(x, g) == y) return true;
  return false;
}

/// All words over 1..arity of length 1..max_len in shortlex order.
inline std::vector<std::vector<int>> shortlex_words(int arity, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> level;
  for (int i = 1; i <= arity; ++i) level.push_back({i});
  for (int len = 1; len <= max_len; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<std::vector<int>> next;
    for (const auto& w : level)
      for (int i = 1; i <= arity; ++i) {
        auto c = w;
        c.push_back(i);
        next.push_back(std::move(c));
      }
    level = std::move(next);
  }
  return out;
}

// Small standard generator sets.
inline std::vector<Perm> sym_gens(int n) {
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = i + 1;
  std::string big = "(";
  for (int i = 1; i <= n; ++i) big += std::to_string(i) + (i < n ? "," : ")");
  return {P("(1,2)", n), P(big, n)};
}

inline std::vector<Perm> alt_gens(int n) {
  std::vector<Perm> out;
  for (int i = 3; i <= n; ++i)
    out.push_back(P("(1,2," + std::to_string(i) + ")", n));
  return out;
}

}  // namespace oracle
