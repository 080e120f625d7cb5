#pragma once

// Stabilizer-chain (Schreier–Sims) engine.  A PermGroup holds its generating
// set plus a base, strong generators and per-level transversals, giving exact
// order, membership sifting, deterministic element enumeration and uniform
// random elements.  Construction is fully deterministic: base points are the
// smallest points moved by the strong generators at hand, orbits are plain
// BFS in generator order, and the chain is verified by checking that every
// Schreier generator sifts to the identity.  The group is immutable once
// built and safe to share across threads read-only.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shortwords/errors.hpp"
#include "shortwords/gens.hpp"
#include "shortwords/perm.hpp"

namespace shortwords {

/// Default guard for brute-force element enumeration.
inline constexpr std::uint64_t default_element_limit = 20'000;

class PermGroup {
 public:
  explicit PermGroup(GeneratorSet gens) : gens_(std::move(gens)) { build(); }

  static PermGroup trivial(int degree) {
    return PermGroup(GeneratorSet::make(degree, {}));
  }

  static PermGroup from_perms(int degree, std::vector<Perm> gens) {
    return PermGroup(GeneratorSet::make(degree, std::move(gens)));
  }

  const GeneratorSet& generators() const noexcept { return gens_; }
  int degree() const noexcept { return gens_.degree; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  const std::vector<int>& base() const noexcept { return base_; }
  const std::vector<Perm>& strong_generators() const noexcept { return strong_; }

  /// Residue of p after stripping through the chain; the identity residue
  /// certifies membership.
  Perm sift(const Perm& p) const {
    if (p.degree() != degree())
      throw PreconditionError(errc::degree_mismatch,
                              "element degree does not match group degree");
    return sift_from(p, 0).first;
  }

  bool contains(const Perm& p) const { return sift(p).is_identity(); }

  /// All elements in depth-first transversal-product order (level-0 choice
  /// varies slowest); the identity comes first.
  std::vector<Perm> elements(std::uint64_t limit = default_element_limit) const {
    if (order_ > limit)
      throw LimitError(errc::order_exceeds_limit,
                       "group order " + std::to_string(order_) +
                           " exceeds element limit " + std::to_string(limit));
    std::vector<Perm> out;
    out.reserve(static_cast<std::size_t>(order_));
    enumerate_rec(0, Perm::identity(degree()), out);
    return out;
  }

  /// Uniformly random element; deterministic for a fixed generator state.
  template <typename URBG>
  Perm random_element(URBG& rng) const {
    Perm tail = Perm::identity(degree());
    for (const Level& lv : levels_) {
      std::uint64_t pick = rng() % lv.orbit.size();
      tail = compose(transversal_rep(lv, static_cast<std::size_t>(pick)), tail);
    }
    return tail;
  }

  /// Canonical representative of the right coset (this)·x, computed by
  /// minimizing the base images level by level.  Two permutations get the
  /// same representative exactly when they lie in the same right coset.
  Perm coset_canonical(Perm x) const {
    if (x.degree() != degree())
      throw PreconditionError(errc::degree_mismatch,
                              "element degree does not match group degree");
    for (const Level& lv : levels_) {
      std::size_t best = 0;
      int best_image = x(lv.orbit[0]);
      for (std::size_t oi = 1; oi < lv.orbit.size(); ++oi) {
        int v = x(lv.orbit[oi]);
        if (v < best_image) {
          best_image = v;
          best = oi;
        }
      }
      if (best != 0) x = compose(transversal_rep(lv, best), x);
    }
    return x;
  }

 private:
  struct Level {
    int base_point = 0;
    std::vector<Perm> gens;
    std::vector<Perm> gen_invs;
    std::vector<int> orbit;                    // discovery order; orbit[0] == base_point
    std::vector<int> pos;                      // point -> orbit index, -1 outside
    std::vector<std::pair<int, int>> via;      // (parent orbit index, gen index)
    std::vector<Perm> reps;                    // cached transversal, may be empty
    std::vector<Perm> rep_invs;
  };

  // Transversal permutations are cached as long as a level stays below this
  // many stored point images; larger levels fall back to Schreier-vector
  // walks.
  static constexpr std::size_t rep_cache_budget = 1'000'000;

  GeneratorSet gens_;
  std::vector<Perm> strong_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;

  Perm transversal_rep(const Level& lv, std::size_t orbit_index) const {
    if (!lv.reps.empty()) return lv.reps[orbit_index];
    std::vector<int> path;
    for (std::size_t cur = orbit_index; lv.via[cur].first >= 0;
         cur = static_cast<std::size_t>(lv.via[cur].first))
      path.push_back(lv.via[cur].second);
    Perm t = Perm::identity(degree());
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      t = compose(t, lv.gens[static_cast<std::size_t>(*it)]);
    return t;
  }

  /// u * rep^{-1} for the transversal element of the given orbit point.
  Perm mult_rep_inverse(Perm u, const Level& lv, std::size_t orbit_index) const {
    if (!lv.rep_invs.empty()) return compose(u, lv.rep_invs[orbit_index]);
    for (std::size_t cur = orbit_index; lv.via[cur].first >= 0;
         cur = static_cast<std::size_t>(lv.via[cur].first))
      u = compose(u, lv.gen_invs[static_cast<std::size_t>(lv.via[cur].second)]);
    return u;
  }

  std::pair<Perm, std::size_t> sift_from(Perm u, std::size_t start) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const Level& lv = levels_[i];
      int image = u(lv.base_point);
      int oi = lv.pos[static_cast<std::size_t>(image)];
      if (oi < 0) return {std::move(u), i};
      u = mult_rep_inverse(std::move(u), lv, static_cast<std::size_t>(oi));
    }
    return {std::move(u), levels_.size()};
  }

  void enumerate_rec(std::size_t level, const Perm& tail,
                     std::vector<Perm>& out) const {
    if (level == levels_.size()) {
      out.push_back(tail);
      return;
    }
    const Level& lv = levels_[level];
    for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi)
      enumerate_rec(level + 1, compose(transversal_rep(lv, oi), tail), out);
  }

  bool fixes_prefix(const Perm& g, std::size_t count) const {
    for (std::size_t i = 0; i < count; ++i)
      if (g(base_[i]) != base_[i]) return false;
    return true;
  }

  /// Appends base points until every strong generator moves one, choosing
  /// the smallest point moved by any still-uncovered generator.
  void extend_base() {
    for (;;) {
      int next = 0;
      for (const Perm& g : strong_) {
        if (!fixes_prefix(g, base_.size())) continue;
        int m = g.min_moved_point();
        if (m > 0 && (next == 0 || m < next)) next = m;
      }
      if (next == 0) return;
      base_.push_back(next);
    }
  }

  void rebuild_levels() {
    levels_.assign(base_.size(), {});
    for (std::size_t i = 0; i < base_.size(); ++i) {
      Level& lv = levels_[i];
      lv.base_point = base_[i];
      for (const Perm& g : strong_)
        if (fixes_prefix(g, i)) {
          lv.gens.push_back(g);
          lv.gen_invs.push_back(inverse(g));
        }
      lv.pos.assign(static_cast<std::size_t>(degree()) + 1, -1);
      lv.orbit = {lv.base_point};
      lv.pos[static_cast<std::size_t>(lv.base_point)] = 0;
      lv.via = {{-1, -1}};
      for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
        for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
          int q = lv.gens[gi](lv.orbit[qi]);
          if (lv.pos[static_cast<std::size_t>(q)] < 0) {
            lv.pos[static_cast<std::size_t>(q)] = static_cast<int>(lv.orbit.size());
            lv.orbit.push_back(q);
            lv.via.emplace_back(static_cast<int>(qi), static_cast<int>(gi));
          }
        }
      }
      if (lv.orbit.size() * static_cast<std::size_t>(degree()) <= rep_cache_budget) {
        lv.reps.resize(lv.orbit.size(), Perm::identity(degree()));
        lv.rep_invs.resize(lv.orbit.size(), Perm::identity(degree()));
        for (std::size_t oi = 1; oi < lv.orbit.size(); ++oi) {
          const auto [parent, gi] = lv.via[oi];
          lv.reps[oi] = compose(lv.reps[static_cast<std::size_t>(parent)],
                                lv.gens[static_cast<std::size_t>(gi)]);
          lv.rep_invs[oi] = inverse(lv.reps[oi]);
        }
      }
    }
  }

  /// Scans the Schreier generators of one level; returns the first residue
  /// that fails to sift, together with the level it got stuck at.
  std::optional<std::pair<Perm, std::size_t>> verify_level(std::size_t i) const {
    const Level& lv = levels_[i];
    for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
      Perm t = transversal_rep(lv, oi);
      for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
        int q = lv.gens[gi](lv.orbit[oi]);
        Perm schreier = mult_rep_inverse(
            compose(t, lv.gens[gi]), lv,
            static_cast<std::size_t>(lv.pos[static_cast<std::size_t>(q)]));
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift_from(std::move(schreier), i + 1);
        if (!residue.is_identity()) return {{std::move(residue), stop}};
      }
    }
    return std::nullopt;
  }

  void build() {
    for (const Perm& g : gens_.gens) {
      if (g.is_identity()) continue;
      bool dup = false;
      for (const Perm& h : strong_)
        if (h == g) {
          dup = true;
          break;
        }
      if (!dup) strong_.push_back(g);
    }
    extend_base();
    rebuild_levels();

    std::size_t i = levels_.size();
    while (i > 0) {
      auto fail = verify_level(i - 1);
      if (!fail) {
        --i;
        continue;
      }
      auto& [residue, stop] = *fail;
      if (stop == levels_.size()) base_.push_back(residue.min_moved_point());
      strong_.push_back(std::move(residue));
      rebuild_levels();
      i = stop + 1;  // re-verify from the dirtied level downward
    }

    order_ = 1;
    for (const Level& lv : levels_) {
      std::uint64_t next;
      if (__builtin_mul_overflow(order_, static_cast<std::uint64_t>(lv.orbit.size()),
                                 &next))
        throw LimitError(errc::order_overflow,
                         "group order exceeds 64 bits");
      order_ = next;
    }
  }
};

inline bool subgroup_leq(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    throw PreconditionError(errc::degree_mismatch,
                            "subgroup test needs equal degrees");
  for (const Perm& g : a.generators().gens)
    if (!b.contains(g)) return false;
  return true;
}

inline bool subgroup_eq(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && subgroup_leq(a, b);
}

/// Brute-force intersection: enumerates the smaller group and keeps the
/// members of the other.
inline PermGroup intersection(const PermGroup& a, const PermGroup& b,
                              std::uint64_t element_limit = default_element_limit) {
  if (a.degree() != b.degree())
    throw PreconditionError(errc::degree_mismatch,
                            "intersection needs equal degrees");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& other = a.order() <= b.order() ? b : a;
  std::vector<Perm> kept;
  PermGroup cur = PermGroup::trivial(a.degree());
  for (const Perm& e : small.elements(element_limit)) {
    if (!other.contains(e) || cur.contains(e)) continue;
    kept.push_back(e);
    cur = PermGroup::from_perms(a.degree(), kept);
  }
  return cur;
}

}  // namespace shortwords
