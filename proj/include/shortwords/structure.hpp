#pragma once

// Desk-scale structure queries: conjugacy classes with power maps,
// centralizers/normalizers, the center, Sylow 2-subgroups, 2-central
// involutions and maximal elementary abelian normal subgroups of a 2-group.
// Everything here is brute force behind an explicit element limit; the
// guard keeps the desk-scale boundary honest instead of thrashing on groups
// these methods were never meant for.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shortwords/errors.hpp"
#include "shortwords/perm.hpp"
#include "shortwords/perm_group.hpp"

namespace shortwords {

struct ConjugacyClass {
  Perm representative;
  std::uint64_t size = 1;
  std::uint64_t centralizer_order = 1;
  long long element_order = 1;
};

/// Conjugacy data of a whole group: classes in first-discovery order over
/// the deterministic element enumeration (so the identity class is first),
/// plus the p-th power maps for every prime dividing the group order.
class ClassTable {
 public:
  const PermGroup& group() const noexcept { return group_; }
  std::uint64_t group_order() const noexcept { return group_.order(); }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }

  /// Power maps stored at construction, one per prime divisor of |G|.
  const std::map<long long, std::vector<int>>& stored_power_maps() const noexcept {
    return power_maps_;
  }

  /// 0-based index of the class containing x.
  int class_of(const Perm& x) const {
    auto it = class_of_.find(x);
    if (it == class_of_.end())
      throw PreconditionError(errc::element_not_contained,
                              "element is not in the tabulated group");
    return it->second;
  }

  /// Human labels in class order: element order, subscripted when several
  /// classes share it ("1", "2_1", "2_2", "3", ...).
  std::vector<std::string> labels() const {
    std::map<long long, int> total, seen;
    for (const auto& c : classes_) ++total[c.element_order];
    std::vector<std::string> out;
    out.reserve(classes_.size());
    for (const auto& c : classes_) {
      int k = ++seen[c.element_order];
      std::string label = std::to_string(c.element_order);
      if (total[c.element_order] > 1) label += "_" + std::to_string(k);
      out.push_back(std::move(label));
    }
    return out;
  }

 private:
  friend ClassTable conjugacy_classes(const PermGroup&, std::uint64_t);
  friend std::vector<int> power_map(const ClassTable&, long long);

  explicit ClassTable(PermGroup group) : group_(std::move(group)) {}

  PermGroup group_;
  std::vector<ConjugacyClass> classes_;
  std::map<long long, std::vector<int>> power_maps_;
  std::unordered_map<Perm, int> class_of_;
};

/// Map sending each class to the class of the p-th powers of its elements.
/// Total for every p; the identity class is always fixed.
inline std::vector<int> power_map(const ClassTable& table, long long p) {
  if (p < 1)
    throw PreconditionError(errc::index_out_of_range, "power must be positive");
  if (auto it = table.power_maps_.find(p); it != table.power_maps_.end())
    return it->second;
  std::vector<int> out;
  out.reserve(table.classes().size());
  for (const auto& c : table.classes())
    out.push_back(table.class_of(power(c.representative, p)));
  return out;
}

inline ClassTable conjugacy_classes(const PermGroup& g,
                                    std::uint64_t limit = default_element_limit) {
  ClassTable table(g);
  const std::vector<Perm> elems = g.elements(limit);
  table.class_of_.reserve(elems.size());

  const auto& gens = g.generators().gens;
  for (const Perm& e : elems) {
    if (table.class_of_.contains(e)) continue;
    const int cls = static_cast<int>(table.classes_.size());
    // conjugation orbit of the first untouched element, BFS in generator order
    std::vector<Perm> queue{e};
    table.class_of_.emplace(e, cls);
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (const Perm& s : gens) {
        Perm c = conjugate(queue[qi], s);
        if (table.class_of_.emplace(c, cls).second) queue.push_back(std::move(c));
      }
    table.classes_.push_back(ConjugacyClass{
        e, queue.size(), g.order() / queue.size(), perm_order(e)});
  }

  std::uint64_t rest = g.order();
  for (std::uint64_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      table.power_maps_[static_cast<long long>(p)] =
          power_map(table, static_cast<long long>(p));
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1)
    table.power_maps_[static_cast<long long>(rest)] =
        power_map(table, static_cast<long long>(rest));
  return table;
}

/// Conjugacy witness: some g in G with g^{-1} x g = y, or nullopt.  Equal
/// cycle types are required before any search is attempted.
inline std::optional<Perm> are_conjugate(const PermGroup& g, const Perm& x,
                                         const Perm& y,
                                         std::uint64_t limit = default_element_limit) {
  if (x.degree() != g.degree() || y.degree() != g.degree())
    throw PreconditionError(errc::degree_mismatch,
                            "conjugacy test needs equal degrees");
  if (!g.contains(x) || !g.contains(y))
    throw PreconditionError(errc::element_not_contained,
                            "conjugacy test arguments must lie in the group");
  if (g.order() > limit)
    throw LimitError(errc::order_exceeds_limit,
                     "group order " + std::to_string(g.order()) +
                         " exceeds element limit " + std::to_string(limit));
  if (cycle_type(x) != cycle_type(y)) return std::nullopt;
  if (x == y) return Perm::identity(g.degree());

  std::unordered_map<Perm, Perm> witness;
  std::vector<Perm> queue{x};
  witness.emplace(x, Perm::identity(g.degree()));
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (const Perm& s : g.generators().gens) {
      Perm c = conjugate(queue[qi], s);
      if (witness.contains(c)) continue;
      Perm w = compose(witness.at(queue[qi]), s);
      if (c == y) return w;
      witness.emplace(c, std::move(w));
      queue.push_back(std::move(c));
    }
  return std::nullopt;
}

namespace detail {

/// Deterministic subgroup from a filtered element list: adopts each element
/// that is not yet generated, in enumeration order.
inline PermGroup span_of(int degree, const std::vector<Perm>& elems) {
  std::vector<Perm> adopted;
  PermGroup cur = PermGroup::trivial(degree);
  for (const Perm& e : elems) {
    if (cur.contains(e)) continue;
    adopted.push_back(e);
    cur = PermGroup::from_perms(degree, adopted);
  }
  return cur;
}

}  // namespace detail

inline PermGroup centralizer(const PermGroup& g, const Perm& x,
                             std::uint64_t limit = default_element_limit) {
  if (x.degree() != g.degree())
    throw PreconditionError(errc::degree_mismatch,
                            "centralizer needs equal degrees");
  std::vector<Perm> kept;
  for (const Perm& e : g.elements(limit))
    if (compose(e, x) == compose(x, e)) kept.push_back(e);
  return detail::span_of(g.degree(), kept);
}

inline PermGroup center(const PermGroup& g,
                        std::uint64_t limit = default_element_limit) {
  std::vector<Perm> kept;
  for (const Perm& e : g.elements(limit)) {
    bool central = true;
    for (const Perm& s : g.generators().gens)
      if (compose(e, s) != compose(s, e)) {
        central = false;
        break;
      }
    if (central) kept.push_back(e);
  }
  return detail::span_of(g.degree(), kept);
}

inline PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                            std::uint64_t limit = default_element_limit) {
  if (g.degree() != h.degree())
    throw PreconditionError(errc::degree_mismatch,
                            "normalizer needs equal degrees");
  std::vector<Perm> kept;
  for (const Perm& e : g.elements(limit)) {
    bool normalizes = true;
    for (const Perm& s : h.generators().gens)
      if (!h.contains(conjugate(s, e))) {
        normalizes = false;
        break;
      }
    if (normalizes) kept.push_back(e);
  }
  return detail::span_of(g.degree(), kept);
}

namespace detail {

inline bool is_two_power(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::uint64_t two_part(std::uint64_t n) {
  std::uint64_t t = 1;
  while (n % 2 == 0) {
    n /= 2;
    t *= 2;
  }
  return t;
}

inline int two_valuation(std::uint64_t n) {
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

}  // namespace detail

/// Sylow 2-subgroup by the ascending normalizer chain: while |P| is short of
/// the full 2-part, adjoin the first 2-power-order element of N_G(P)\P whose
/// adjunction keeps the span a 2-group.
inline PermGroup sylow2(const PermGroup& g,
                        std::uint64_t limit = default_element_limit) {
  if (g.order() > limit)
    throw LimitError(errc::order_exceeds_limit,
                     "group order " + std::to_string(g.order()) +
                         " exceeds element limit " + std::to_string(limit));
  const std::uint64_t target = detail::two_part(g.order());
  PermGroup p = PermGroup::trivial(g.degree());
  std::vector<Perm> adopted;
  while (p.order() < target) {
    PermGroup n = normalizer(g, p, limit);
    bool extended = false;
    for (const Perm& x : n.elements(limit)) {
      if (p.contains(x)) continue;
      if (!detail::is_two_power(static_cast<std::uint64_t>(perm_order(x)))) continue;
      adopted.push_back(x);
      PermGroup q = PermGroup::from_perms(g.degree(), adopted);
      if (detail::is_two_power(q.order())) {
        p = std::move(q);
        extended = true;
        break;
      }
      adopted.pop_back();
    }
    if (!extended)
      throw Error(errc::order_overflow,
                  "sylow2 extension stalled; chain invariant broken");
  }
  return p;
}

/// Classes of involutions whose centralizer carries the full 2-part of |G|
/// (equivalently: involutions central in some Sylow 2-subgroup), in class
/// order.
inline std::vector<int> two_central_involutions(const ClassTable& table) {
  const int v = detail::two_valuation(table.group_order());
  std::vector<int> out;
  for (std::size_t i = 0; i < table.classes().size(); ++i) {
    const auto& c = table.classes()[i];
    if (c.element_order == 2 &&
        detail::two_valuation(c.centralizer_order) == v)
      out.push_back(static_cast<int>(i));
  }
  return out;
}

inline std::vector<ConjugacyClass> two_central_involutions(
    const PermGroup& g, std::uint64_t limit = default_element_limit) {
  ClassTable table = conjugacy_classes(g, limit);
  std::vector<ConjugacyClass> out;
  for (int i : two_central_involutions(table))
    out.push_back(table.classes()[static_cast<std::size_t>(i)]);
  return out;
}

namespace detail {

/// Key for dedup/memoization of subgroups: the sorted element list.
inline std::vector<Perm> subgroup_key(const PermGroup& g, std::uint64_t limit) {
  std::vector<Perm> elems = g.elements(limit);
  std::sort(elems.begin(), elems.end());
  return elems;
}

/// Involutions t that extend V to a strictly larger elementary abelian
/// subgroup normal in S: t outside V, commuting with V, with <V, t> closed
/// under conjugation by S's generators.  Commuting involutions make the span
/// elementary abelian automatically.
inline std::vector<Perm> elab_extensions(const PermGroup& s, const PermGroup& v,
                                         const std::vector<Perm>& involutions) {
  std::vector<Perm> out;
  for (const Perm& t : involutions) {
    if (v.contains(t)) continue;
    bool commutes = true;
    for (const Perm& w : v.generators().gens)
      if (compose(t, w) != compose(w, t)) {
        commutes = false;
        break;
      }
    if (!commutes) continue;
    std::vector<Perm> wgens = v.generators().gens;
    wgens.push_back(t);
    PermGroup w = PermGroup::from_perms(s.degree(), wgens);
    bool normal = true;
    for (const Perm& g : s.generators().gens) {
      for (const Perm& x : w.generators().gens)
        if (!w.contains(conjugate(x, g))) {
          normal = false;
          break;
        }
      if (!normal) break;
    }
    if (normal) out.push_back(t);
  }
  return out;
}

inline bool is_elementary_abelian(const PermGroup& g) {
  const auto& gens = g.generators().gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!compose(gens[i], gens[i]).is_identity()) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  }
  return true;
}

inline bool is_normal_in(const PermGroup& h, const PermGroup& g) {
  for (const Perm& s : g.generators().gens)
    for (const Perm& x : h.generators().gens)
      if (!h.contains(conjugate(x, s))) return false;
  return true;
}

inline void require_two_group(const PermGroup& s, std::uint64_t limit) {
  if (s.order() > limit)
    throw LimitError(errc::order_exceeds_limit,
                     "group order " + std::to_string(s.order()) +
                         " exceeds element limit " + std::to_string(limit));
  if (!is_two_power(s.order()))
    throw PreconditionError(errc::not_a_two_group,
                            "group order " + std::to_string(s.order()) +
                                " is not a power of 2");
}

struct MaxElabSearch {
  const PermGroup& s;
  std::vector<Perm> involutions;
  std::uint64_t limit;
  std::vector<PermGroup> results;
  std::set<std::vector<Perm>> visited;  // subgroups seen, as sorted element lists

  void run(const PermGroup& v) {
    if (!visited.insert(subgroup_key(v, limit)).second) return;
    auto cands = elab_extensions(s, v, involutions);
    if (cands.empty()) {
      results.push_back(v);
      return;
    }
    for (const Perm& t : cands) {
      std::vector<Perm> wgens = v.generators().gens;
      wgens.push_back(t);
      run(PermGroup::from_perms(s.degree(), wgens));
    }
  }
};

}  // namespace detail

/// All subgroups of the 2-group S that are elementary abelian, normal in S,
/// and maximal among such.  Found by extending upward through single
/// involution adjunctions; a 2-group acting on an elementary abelian section
/// always fixes an invariant flag, so single steps reach every candidate.
inline std::vector<PermGroup> maximal_elementary_abelian_normals(
    const PermGroup& s, std::uint64_t limit = default_element_limit) {
  detail::require_two_group(s, limit);
  std::vector<Perm> involutions;
  for (const Perm& e : s.elements(limit))
    if (!e.is_identity() && compose(e, e).is_identity()) involutions.push_back(e);
  if (detail::is_elementary_abelian(s)) return {s};
  detail::MaxElabSearch search{s, std::move(involutions), limit, {}, {}};
  search.run(PermGroup::trivial(s.degree()));
  return std::move(search.results);
}

/// True when V (elementary abelian and normal in S) admits no proper
/// elementary abelian normal overgroup in S.
inline bool is_maximal_el_ab_normal(const PermGroup& s, const PermGroup& v,
                                    std::uint64_t limit = default_element_limit) {
  detail::require_two_group(s, limit);
  if (v.degree() != s.degree() || !subgroup_leq(v, s) ||
      !detail::is_elementary_abelian(v) || !detail::is_normal_in(v, s))
    throw PreconditionError(errc::checker_precondition_violated,
                            "checker needs an elementary abelian subgroup "
                            "normal in S");
  std::vector<Perm> involutions;
  for (const Perm& e : s.elements(limit))
    if (!e.is_identity() && compose(e, e).is_identity()) involutions.push_back(e);
  return detail::elab_extensions(s, v, involutions).empty();
}

}  // namespace shortwords
