#pragma once

// Structural combinators: S^I, local monoids eSe, generated subsemigroups,
// direct products, quotients by congruences, and <Reg(S)>.

#include <span>
#include <utility>
#include <vector>

#include "semilab/semigroup.hpp"

namespace semilab {

  // S^I.  `embedding[x]` is the image of the old element x; the adjoined
  // identity is always a fresh element with index S.order(), even if S is
  // already a monoid.
  struct AdjoinedIdentity {
    FiniteSemigroup      semigroup;
    std::vector<Element> embedding;
    Element              identity;
  };

  // A subsemigroup together with `inclusion[new] = old`.  Elements keep the
  // relative order they had in the parent.
  struct Subsemigroup {
    FiniteSemigroup      semigroup;
    std::vector<Element> inclusion;
  };

  // S x T with the element (s, t) at index s * T.order() + t.
  struct DirectProduct {
    FiniteSemigroup                      semigroup;
    std::vector<std::pair<Element, Element>> components;
  };

  // S / ~ with `projection[old] = class index`.
  struct Quotient {
    FiniteSemigroup      semigroup;
    std::vector<Element> projection;
  };

  AdjoinedIdentity adjoin_identity(FiniteSemigroup const& s);

  // eSe; throws NotIdempotent.
  Subsemigroup local_subsemigroup(FiniteSemigroup const& s, Element e);

  // <X>; throws EmptyGeneratorSet.
  Subsemigroup generated_subsemigroup(FiniteSemigroup const& s,
                                      std::span<Element const> generators);

  DirectProduct direct_product(FiniteSemigroup const& s,
                               FiniteSemigroup const& t);

  // Quotient by the least congruence containing `pairs`.
  Quotient quotient(FiniteSemigroup const&                          s,
                    std::span<std::pair<Element, Element> const> pairs);

  // Class map of the least congruence containing `pairs`: result[x] is the
  // least element congruent to x.
  std::vector<Element>
  congruence_closure(FiniteSemigroup const&                          s,
                     std::span<std::pair<Element, Element> const> pairs);

  // <Reg(S)>, the subsemigroup generated by the regular elements.
  Subsemigroup regular_core(FiniteSemigroup const& s);

  // Elements of <X> as a sorted list (no table is built).
  std::vector<Element> closure_of(FiniteSemigroup const&   s,
                                  std::span<Element const> generators);

  // A small generating set, chosen greedily in index order.
  std::vector<Element> generating_set(FiniteSemigroup const& s);

}  // namespace semilab
