#pragma once

// Deterministic generators of small test semigroups.

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "semilab/morphism.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

  inline constexpr std::size_t max_exhaustive_order = 3;

  // All semigroups of exactly this order up to isomorphism, in order of
  // first appearance when tables are enumerated lexicographically.  Throws
  // TooLarge for order > 3.
  std::vector<FiniteSemigroup> exhaustive_semigroups(std::size_t order);

  // Orders 1..max_order concatenated.
  std::vector<FiniteSemigroup> exhaustive_corpus(std::size_t max_order);

  // The subsemigroup of T_degree generated by `generators` random maps drawn
  // from a 64-bit Mersenne twister seeded with `seed`.
  FiniteSemigroup random_transformation_semigroup(std::size_t   degree,
                                                  std::size_t   generators,
                                                  std::uint64_t seed);

  // Syntactic semigroup of A* a1 A* ... ak A* (as a +-language) with its
  // canonical letter morphism.  These are J-trivial.
  struct PiecewiseMember {
    std::string    subword;
    LetterMorphism morphism;

    FiniteSemigroup const& semigroup() const noexcept {
      return morphism.target();
    }
  };

  PiecewiseMember piecewise_member(std::vector<char> const& alphabet,
                                   std::string const&       subword);

  // All subwords of length 1..max_length in shortlex order.
  std::vector<PiecewiseMember>
  piecewise_syntactic(std::vector<char> const& alphabet,
                      std::size_t              max_length);

  // Tagged corpus request, mirroring the three generators above.
  struct Exhaustive {
    std::size_t max_order;
  };
  struct RandomTransformation {
    std::size_t   degree;
    std::size_t   generators;
    std::uint64_t seed;
    std::size_t   count = 1;  // seeds seed, seed+1, ...
  };
  struct PiecewiseSyntactic {
    std::vector<char> alphabet;
    std::size_t       max_length;
  };
  using CorpusSpec = std::variant<Exhaustive, RandomTransformation,
                                  PiecewiseSyntactic>;

  std::vector<FiniteSemigroup> small_corpus(CorpusSpec const& spec);

}  // namespace semilab
