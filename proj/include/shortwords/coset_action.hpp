#pragma once

// Permutation action of a group on the right cosets of a subgroup.  Cosets
// are labeled in BFS order starting from U·id, expanding by the group's
// generators in order, so point 1 always corresponds to U itself and the
// numbering is reproducible.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "shortwords/errors.hpp"
#include "shortwords/perm.hpp"
#include "shortwords/perm_group.hpp"

namespace shortwords {

inline constexpr std::uint64_t default_index_limit = 20'000;

struct CosetActionResult {
  PermGroup image;                  // degree [G:U]
  std::vector<Perm> point_to_coset; // 1-based point i -> canonical rep of its coset
  std::uint64_t kernel_order = 1;
};

inline CosetActionResult coset_action(const PermGroup& g, const PermGroup& u,
                                      std::uint64_t index_limit = default_index_limit) {
  if (g.degree() != u.degree())
    throw PreconditionError(errc::degree_mismatch,
                            "coset action needs equal degrees");
  if (!subgroup_leq(u, g))
    throw PreconditionError(errc::not_a_subgroup,
                            "U is not a subgroup of G");
  const std::uint64_t index = g.order() / u.order();
  if (index > index_limit)
    throw LimitError(errc::index_exceeds_limit,
                     "coset index " + std::to_string(index) +
                         " exceeds limit " + std::to_string(index_limit));

  const int arity = g.generators().arity();
  std::vector<Perm> reps;
  reps.reserve(static_cast<std::size_t>(index));
  std::unordered_map<Perm, std::size_t> coset_of;
  reps.push_back(u.coset_canonical(Perm::identity(g.degree())));
  coset_of.emplace(reps[0], 0);

  std::vector<std::vector<int>> rows(static_cast<std::size_t>(arity));
  for (std::size_t qi = 0; qi < reps.size(); ++qi) {
    for (int gi = 0; gi < arity; ++gi) {
      Perm child = u.coset_canonical(
          compose(reps[qi], g.generators().gens[static_cast<std::size_t>(gi)]));
      auto [it, inserted] = coset_of.emplace(child, reps.size());
      if (inserted) reps.push_back(std::move(child));
      rows[static_cast<std::size_t>(gi)].push_back(static_cast<int>(it->second) + 1);
    }
  }

  if (reps.size() != index)
    throw Error(errc::not_a_subgroup,
                "coset enumeration found " + std::to_string(reps.size()) +
                    " cosets, expected " + std::to_string(index));
  const int image_degree = static_cast<int>(index);
  std::vector<Perm> image_gens;
  image_gens.reserve(static_cast<std::size_t>(arity));
  for (int gi = 0; gi < arity; ++gi)
    image_gens.push_back(
        Perm::from_images(std::move(rows[static_cast<std::size_t>(gi)])));

  PermGroup image(GeneratorSet::make(image_degree, std::move(image_gens),
                                     g.generators().names));
  CosetActionResult result{std::move(image), std::move(reps), 1};
  result.kernel_order = g.order() / result.image.order();
  return result;
}

}  // namespace shortwords
