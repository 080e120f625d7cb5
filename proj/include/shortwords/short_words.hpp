#pragma once

// Short-word search: generator-set reduction, short-word generating sets for
// subgroups, short-word expressions for single elements (exact or up to
// conjugacy), and the two-step strategies that route a deep search through an
// intermediate subgroup.
//
// Words are visited level by level in shortlex order.  Power scans are
// pinned ascending (candidate exponents m = 1, 2, ... and coprime
// multipliers a = 1, 2, ...) so that identical inputs always produce
// identical word lists.

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "shortwords/errors.hpp"
#include "shortwords/gens.hpp"
#include "shortwords/perm.hpp"
#include "shortwords/perm_group.hpp"
#include "shortwords/structure.hpp"
#include "shortwords/words.hpp"

namespace shortwords {

/// Greedy generator elimination: scan from the last generator toward the
/// first, drop any generator whose removal still leaves the target inside
/// <kept, exclude>, and restart the scan after each removal.  Returns the
/// kept 1-based indices into the original set plus the reduced set itself.
inline std::pair<std::vector<int>, GeneratorSet> reduce_gens_for_group(
    const GeneratorSet& gens, const PermGroup& target,
    const std::optional<PermGroup>& exclude = {}) {
  if (target.degree() != gens.degree ||
      (exclude && exclude->degree() != gens.degree))
    throw PreconditionError(errc::degree_mismatch,
                            "reduction needs equal degrees");

  auto covered = [&](const std::vector<int>& kept) {
    std::vector<Perm> span;
    for (int i : kept) span.push_back(gens.gens[static_cast<std::size_t>(i - 1)]);
    if (exclude)
      span.insert(span.end(), exclude->generators().gens.begin(),
                  exclude->generators().gens.end());
    return subgroup_leq(target, PermGroup::from_perms(gens.degree, span));
  };

  std::vector<int> kept(static_cast<std::size_t>(gens.arity()));
  std::iota(kept.begin(), kept.end(), 1);
  if (!covered(kept))
    throw PreconditionError(errc::target_not_covered, "can't generate subgroup");

  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t d = kept.size(); d-- > 0;) {
      std::vector<int> trial = kept;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(d));
      if (covered(trial)) {
        kept = std::move(trial);
        removed = true;
        break;
      }
    }
  }

  std::vector<Perm> rgens;
  std::vector<std::string> rnames;
  for (int i : kept) {
    rgens.push_back(gens.gens[static_cast<std::size_t>(i - 1)]);
    rnames.push_back(gens.names[static_cast<std::size_t>(i - 1)]);
  }
  return {std::move(kept), GeneratorSet::make(gens.degree, std::move(rgens),
                                              std::move(rnames))};
}

/// Same greedy elimination with single-element membership as the criterion.
inline std::pair<std::vector<int>, GeneratorSet> reduce_gens_for_elt(
    const GeneratorSet& gens, const Perm& x) {
  if (x.degree() != gens.degree)
    throw PreconditionError(errc::degree_mismatch,
                            "reduction needs equal degrees");

  auto covered = [&](const std::vector<int>& kept) {
    std::vector<Perm> span;
    for (int i : kept) span.push_back(gens.gens[static_cast<std::size_t>(i - 1)]);
    return PermGroup::from_perms(gens.degree, span).contains(x);
  };

  std::vector<int> kept(static_cast<std::size_t>(gens.arity()));
  std::iota(kept.begin(), kept.end(), 1);
  if (!covered(kept))
    throw PreconditionError(errc::element_not_contained,
                            "element lies outside the generated group");

  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t d = kept.size(); d-- > 0;) {
      std::vector<int> trial = kept;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(d));
      if (covered(trial)) {
        kept = std::move(trial);
        removed = true;
        break;
      }
    }
  }

  std::vector<Perm> rgens;
  std::vector<std::string> rnames;
  for (int i : kept) {
    rgens.push_back(gens.gens[static_cast<std::size_t>(i - 1)]);
    rnames.push_back(gens.names[static_cast<std::size_t>(i - 1)]);
  }
  return {std::move(kept), GeneratorSet::make(gens.degree, std::move(rgens),
                                              std::move(rnames))};
}

enum class SearchStatus { complete, unfinished, single_generator_exhausted };

struct ShortGensOptions {
  std::optional<PermGroup> exclude{};
  bool reduce_first = true;  // drop redundant generators before searching
  bool reduce_more = true;   // shrink the found set afterwards
  std::vector<long long> order_restriction{};
  long long iteration_limit = 0;  // word-tree levels; 0 = unbounded
  std::uint64_t element_limit = default_element_limit;
  std::size_t frontier_capacity = default_frontier_capacity;
  std::ostream* trace = nullptr;
};

struct ShortGensResult {
  SearchStatus status = SearchStatus::complete;
  std::vector<PoweredWord> powered_words;  // indices refer to the original set
  std::vector<std::string> rendered;
  std::vector<int> kept_generator_indices;  // survivors of reduce_first
};

/// Short-word generating set for a subgroup.  Words are scanned in shortlex
/// order over the (optionally reduced) generators; for each word element y
/// the first ascending power y^m inside the target but outside the group
/// found so far is adjoined, until the target is reached.  With an order
/// restriction O, y^(order(y)/o) is tried instead for each o in O dividing
/// order(y).
inline ShortGensResult get_short_gens(const GeneratorSet& gens,
                                      const PermGroup& target,
                                      const ShortGensOptions& opts = {}) {
  if (target.degree() != gens.degree ||
      (opts.exclude && opts.exclude->degree() != gens.degree))
    throw PreconditionError(errc::degree_mismatch,
                            "search needs equal degrees");

  {
    std::vector<Perm> span = gens.gens;
    if (opts.exclude)
      span.insert(span.end(), opts.exclude->generators().gens.begin(),
                  opts.exclude->generators().gens.end());
    if (!subgroup_leq(target, PermGroup::from_perms(gens.degree, span)))
      throw PreconditionError(errc::target_not_covered, "can't generate subgroup");
  }

  ShortGensResult result;
  result.kept_generator_indices.resize(static_cast<std::size_t>(gens.arity()));
  std::iota(result.kept_generator_indices.begin(),
            result.kept_generator_indices.end(), 1);
  GeneratorSet working = gens;
  if (opts.reduce_first) {
    auto reduced = reduce_gens_for_group(gens, target, opts.exclude);
    result.kept_generator_indices = std::move(reduced.first);
    working = std::move(reduced.second);
    if (opts.trace)
      *opts.trace << "reduced to " << working.arity() << " of " << gens.arity()
                  << " generators\n";
  }

  PermGroup found_group =
      opts.exclude ? intersection(target, *opts.exclude, opts.element_limit)
                   : PermGroup::trivial(gens.degree);
  std::vector<Perm> found_group_gens = found_group.generators().gens;
  std::vector<Perm> found_elts;

  std::vector<long long> restriction = opts.order_restriction;
  std::sort(restriction.begin(), restriction.end());
  restriction.erase(std::unique(restriction.begin(), restriction.end()),
                    restriction.end());
  for (long long o : restriction)
    if (o < 1)
      throw PreconditionError(errc::index_out_of_range,
                              "order restriction entries must be positive");

  auto finish = [&](SearchStatus status) {
    result.status = status;
    if (status == SearchStatus::complete && opts.reduce_more &&
        found_elts.size() > 1) {
      auto found_set = GeneratorSet::make(gens.degree, found_elts);
      auto reduced = reduce_gens_for_group(found_set, target, opts.exclude);
      std::vector<PoweredWord> filtered;
      for (int i : reduced.first)
        filtered.push_back(std::move(result.powered_words[static_cast<std::size_t>(i - 1)]));
      result.powered_words = std::move(filtered);
    }
    for (const PoweredWord& pw : result.powered_words)
      result.rendered.push_back(format_word(pw, gens.names));
    return result;
  };

  if (found_group.order() == target.order()) return finish(SearchStatus::complete);

  const int arity = working.arity();
  bool complete = false;

  auto accept = [&](const NumericalWord& w, long long m, const Perm& elt) {
    NumericalWord original;
    original.reserve(w.size());
    for (int letter : w)
      original.push_back(
          result.kept_generator_indices[static_cast<std::size_t>(letter - 1)]);
    if (opts.trace)
      *opts.trace << "got a new element: " << format_word(original, gens.names, m)
                  << "\n";
    result.powered_words.push_back({std::move(original), m});
    found_elts.push_back(elt);
    found_group_gens.push_back(elt);
    found_group = PermGroup::from_perms(gens.degree, found_group_gens);
    if (found_group.order() == target.order()) complete = true;
  };

  WordFrontier frontier;
  long long level = 0;
  for (;;) {
    if (opts.iteration_limit > 0 && level >= opts.iteration_limit)
      return finish(SearchStatus::unfinished);
    if (arity == 1 && level >= perm_order(working.gens[0]))
      return finish(SearchStatus::single_generator_exhausted);
    ++level;
    if (opts.trace) *opts.trace << "level " << level << "\n";
    frontier = enum_words(std::move(frontier), arity, opts.frontier_capacity);

    for (std::size_t j = frontier.window_start; j <= frontier.window_end; ++j) {
      const NumericalWord& w = frontier.words[j - 1];
      const Perm y = word_to_elt(working, w);
      const long long r = perm_order(y);
      if (restriction.empty()) {
        Perm pow = y;
        for (long long m = 1; m < r; ++m) {
          if (m > 1) pow = compose(pow, y);
          if (!found_group.contains(pow) && target.contains(pow)) {
            accept(w, m, pow);
            break;
          }
        }
      } else {
        for (long long o : restriction) {
          if (r % o != 0) continue;
          const long long m = r / o;
          const Perm pow = power(y, m);
          if (!found_group.contains(pow) && target.contains(pow))
            accept(w, m, pow);
          if (complete) break;
        }
      }
      if (complete) return finish(SearchStatus::complete);
    }
  }
}

enum class LookupStatus { found_exact, found_conjugate, unfinished };

struct LookupOptions {
  bool conjugate_check = false;
  bool reduce_first = true;  // disabled automatically under conjugate_check
  long long iteration_limit = 0;
  std::uint64_t element_limit = default_element_limit;
  std::size_t frontier_capacity = default_frontier_capacity;
  std::ostream* trace = nullptr;
};

struct LookupResult {
  LookupStatus status = LookupStatus::unfinished;
  PoweredWord word;  // over the original generator indices; valid when found
  std::string rendered;
  std::vector<int> kept_generator_indices;
};

/// Short word whose power equals x exactly (or is conjugate to x under
/// conjugate_check).  For each word element y with r = order(y) and
/// s = order(x), s | r, the exponents (r/s)·a are tried for ascending a
/// coprime to s; power(word, exponent) then equals x on return.
inline LookupResult lookup_word(const GeneratorSet& gens, const Perm& x,
                                const LookupOptions& opts = {}) {
  if (x.degree() != gens.degree)
    throw PreconditionError(errc::degree_mismatch, "lookup needs equal degrees");

  PermGroup group = PermGroup::from_perms(gens.degree, gens.gens);
  if (!group.contains(x))
    throw PreconditionError(errc::element_not_contained,
                            "couldn't find a word for it: element is outside "
                            "the generated group");

  LookupResult result;
  result.kept_generator_indices.resize(static_cast<std::size_t>(gens.arity()));
  std::iota(result.kept_generator_indices.begin(),
            result.kept_generator_indices.end(), 1);

  if (x.is_identity()) {
    if (opts.trace) *opts.trace << "it is the identity!\n";
    result.status = LookupStatus::found_exact;
    result.word = PoweredWord{{}, 1};
    result.rendered = "Id($)";
    return result;
  }

  GeneratorSet working = gens;
  if (opts.reduce_first && !opts.conjugate_check) {
    auto reduced = reduce_gens_for_elt(gens, x);
    result.kept_generator_indices = std::move(reduced.first);
    working = std::move(reduced.second);
    if (opts.trace)
      *opts.trace << "reduced to " << working.arity() << " of " << gens.arity()
                  << " generators\n";
  }

  const long long s = perm_order(x);
  std::vector<long long> coprime;
  for (long long a = 1; a <= s; ++a)
    if (std::gcd(a, s) == 1) coprime.push_back(a);

  // Under the conjugacy variant the class of x is computed once up front;
  // membership in it is exactly conjugacy under the ambient group <gens>.
  std::unordered_set<Perm> class_of_x;
  std::vector<int> x_type;
  if (opts.conjugate_check) {
    if (group.order() > opts.element_limit)
      throw LimitError(errc::order_exceeds_limit,
                       "group order " + std::to_string(group.order()) +
                           " exceeds element limit for the conjugacy test");
    x_type = cycle_type(x);
    std::vector<Perm> queue{x};
    class_of_x.insert(x);
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (const Perm& g : group.generators().gens) {
        Perm c = conjugate(queue[qi], g);
        if (class_of_x.insert(c).second) queue.push_back(std::move(c));
      }
  }

  auto deliver = [&](const NumericalWord& w, long long exponent,
                     LookupStatus status) {
    NumericalWord original;
    original.reserve(w.size());
    for (int letter : w)
      original.push_back(
          result.kept_generator_indices[static_cast<std::size_t>(letter - 1)]);
    result.status = status;
    result.word = PoweredWord{std::move(original), exponent};
    result.rendered = format_word(result.word, gens.names);
    if (opts.trace)
      *opts.trace << (status == LookupStatus::found_exact
                          ? "got a word (exact): "
                          : "got a conjugate word: ")
                  << result.rendered << "\n";
    return result;
  };

  WordFrontier frontier;
  long long level = 0;
  const int arity = working.arity();
  for (;;) {
    if (opts.iteration_limit > 0 && level >= opts.iteration_limit) {
      if (opts.trace) *opts.trace << "couldn't find a word\n";
      result.status = LookupStatus::unfinished;
      return result;
    }
    ++level;
    if (opts.trace) *opts.trace << "level " << level << "\n";
    frontier = enum_words(std::move(frontier), arity, opts.frontier_capacity);

    for (std::size_t j = frontier.window_start; j <= frontier.window_end; ++j) {
      const NumericalWord& w = frontier.words[j - 1];
      const Perm y = word_to_elt(working, w);
      const long long r = perm_order(y);
      if (r % s != 0) continue;
      const long long q = r / s;
      const Perm z = power(y, q);
      for (long long a : coprime) {
        const Perm candidate = a == 1 ? z : power(z, a);
        if (candidate == x) return deliver(w, q * a, LookupStatus::found_exact);
        if (opts.conjugate_check && cycle_type(candidate) == x_type &&
            class_of_x.contains(candidate))
          return deliver(w, q * a, LookupStatus::found_conjugate);
      }
    }
  }
}

namespace detail {

/// Substitutes each letter's defining powered word: the word for t_l
/// repeated exponent(t_l) times, concatenated over the letters.  A
/// single-letter nested word keeps its power notation, so exponents merge
/// instead of unrolling.
inline PoweredWord flatten_word(const PoweredWord& nested,
                                const std::vector<PoweredWord>& letters) {
  if (nested.word.size() == 1) {
    const PoweredWord& t = letters[static_cast<std::size_t>(nested.word[0] - 1)];
    return PoweredWord{t.word, t.exponent * nested.exponent};
  }
  NumericalWord base;
  for (int letter : nested.word) {
    const PoweredWord& t = letters[static_cast<std::size_t>(letter - 1)];
    for (long long rep = 0; rep < t.exponent; ++rep)
      base.insert(base.end(), t.word.begin(), t.word.end());
  }
  return PoweredWord{std::move(base), nested.exponent};
}

inline std::vector<std::string> intermediate_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

}  // namespace detail

struct TwoStepGensResult {
  SearchStatus status = SearchStatus::complete;
  ShortGensResult step1;   // generators for the intermediate group T
  ShortGensResult nested;  // step-2 words over t1..tn
  std::vector<PoweredWord> flattened;  // over the original generators
  std::vector<std::string> rendered;
  std::vector<std::string> warnings;
};

/// Two-step search through an intermediate subgroup: find short generators
/// t1..tn for T, then search S over the t's, and substitute the t-words back
/// so the result is expressed over the original generators.  Nested and
/// flattened forms evaluate to the same permutations element by element.
inline TwoStepGensResult two_step_get_short_gens(const GeneratorSet& gens,
                                                 const PermGroup& mid,
                                                 const PermGroup& target,
                                                 const ShortGensOptions& opts = {}) {
  if (mid.degree() != gens.degree || target.degree() != gens.degree)
    throw PreconditionError(errc::degree_mismatch,
                            "two-step search needs equal degrees");
  if (!subgroup_leq(target, mid))
    throw PreconditionError(errc::chain_violated,
                            "S must be contained in the intermediate group T");
  PermGroup group = PermGroup::from_perms(gens.degree, gens.gens);
  if (!subgroup_leq(mid, group))
    throw PreconditionError(errc::target_not_covered, "can't generate subgroup");

  TwoStepGensResult result;
  if (subgroup_eq(mid, group))
    result.warnings.push_back("T equals the whole group; the strategy "
                              "degenerates to a single search");
  if (target.order() == mid.order())
    result.warnings.push_back("S equals T; step 2 is the identity substitution");

  // exclude and order_restriction describe the final target; step 1 runs
  // with plain settings.
  ShortGensOptions step1_opts = opts;
  step1_opts.exclude.reset();
  step1_opts.order_restriction.clear();
  result.step1 = get_short_gens(gens, mid, step1_opts);
  if (result.step1.status != SearchStatus::complete) {
    result.status = result.step1.status;
    return result;
  }

  std::vector<Perm> t_elts;
  for (const PoweredWord& pw : result.step1.powered_words)
    t_elts.push_back(eval_powered_word(gens, pw));
  GeneratorSet t_set = GeneratorSet::make(
      gens.degree, t_elts, detail::intermediate_names(t_elts.size()));

  result.nested = get_short_gens(t_set, target, opts);
  result.status = result.nested.status;
  if (result.status != SearchStatus::complete) return result;

  for (const PoweredWord& pw : result.nested.powered_words) {
    PoweredWord flat = detail::flatten_word(pw, result.step1.powered_words);
    result.rendered.push_back(format_word(flat, gens.names));
    result.flattened.push_back(std::move(flat));
  }
  return result;
}

struct TwoStepLookupResult {
  LookupStatus status = LookupStatus::unfinished;
  ShortGensResult step1;
  LookupResult nested;  // over t1..tn
  PoweredWord flattened;
  std::string rendered;
  std::vector<std::string> warnings;
};

/// Two-step word lookup: short generators for T first, then a word for x
/// over them, flattened back to the original generators.
inline TwoStepLookupResult two_step_lookup_word(const GeneratorSet& gens,
                                                const PermGroup& mid,
                                                const Perm& x,
                                                const LookupOptions& opts = {}) {
  if (mid.degree() != gens.degree || x.degree() != gens.degree)
    throw PreconditionError(errc::degree_mismatch,
                            "two-step lookup needs equal degrees");
  if (!mid.contains(x))
    throw PreconditionError(errc::element_not_contained,
                            "element must lie in the intermediate group");
  PermGroup group = PermGroup::from_perms(gens.degree, gens.gens);
  if (!subgroup_leq(mid, group))
    throw PreconditionError(errc::target_not_covered, "can't generate subgroup");

  TwoStepLookupResult result;
  if (x.is_identity()) {
    result.status = LookupStatus::found_exact;
    result.flattened = PoweredWord{{}, 1};
    result.rendered = "Id($)";
    return result;
  }
  if (subgroup_eq(mid, group))
    result.warnings.push_back("T equals the whole group; the strategy "
                              "degenerates to a plain lookup");

  ShortGensOptions step1_opts;
  step1_opts.iteration_limit = opts.iteration_limit;
  step1_opts.element_limit = opts.element_limit;
  step1_opts.frontier_capacity = opts.frontier_capacity;
  step1_opts.trace = opts.trace;
  result.step1 = get_short_gens(gens, mid, step1_opts);
  if (result.step1.status != SearchStatus::complete) {
    result.status = LookupStatus::unfinished;
    return result;
  }

  std::vector<Perm> t_elts;
  for (const PoweredWord& pw : result.step1.powered_words)
    t_elts.push_back(eval_powered_word(gens, pw));
  GeneratorSet t_set = GeneratorSet::make(
      gens.degree, t_elts, detail::intermediate_names(t_elts.size()));

  result.nested = lookup_word(t_set, x, opts);
  result.status = result.nested.status;
  if (result.status == LookupStatus::unfinished) return result;

  result.flattened =
      detail::flatten_word(result.nested.word, result.step1.powered_words);
  result.rendered = format_word(result.flattened, gens.names);
  return result;
}

}  // namespace shortwords
