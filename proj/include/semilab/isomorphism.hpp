#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semilab/semigroup.hpp"

namespace semilab {

  inline constexpr std::size_t default_isomorphism_bound = 12;

  // Backtracking over images of a generating set, pruned by element
  // invariants (idempotency, index and period, Green class sizes, ...).
  // Returns `map` with map[x] in T for every x in S.  With respect_identity
  // set, S and T must agree on whether they are monoids; any semigroup
  // isomorphism maps an identity to an identity, so this only shortcuts.
  // Throws TooLarge when the order exceeds `bound`.
  std::optional<std::vector<Element>>
  find_isomorphism(FiniteSemigroup const& s,
                   FiniteSemigroup const& t,
                   bool                   respect_identity = false,
                   std::size_t            bound = default_isomorphism_bound);

  bool is_isomorphic(FiniteSemigroup const& s,
                     FiniteSemigroup const& t,
                     bool                   respect_identity = false,
                     std::size_t            bound = default_isomorphism_bound);

  // The unique isomorphism with s_gens[i] -> t_gens[i], if there is one.
  // s_gens must generate S.  Linear in the orders; no size bound.
  std::optional<std::vector<Element>>
  extend_to_isomorphism(FiniteSemigroup const&   s,
                        std::span<Element const> s_gens,
                        FiniteSemigroup const&   t,
                        std::span<Element const> t_gens);

  // True iff map is a bijective homomorphism S -> T.
  bool is_isomorphism(FiniteSemigroup const&      s,
                      FiniteSemigroup const&      t,
                      std::vector<Element> const& map);

  // Copy of S with elements relabelled by the permutation perm (old -> new).
  FiniteSemigroup permuted(FiniteSemigroup const&      s,
                           std::vector<Element> const& perm);

}  // namespace semilab
