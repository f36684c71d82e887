#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "semilab/semigroup.hpp"

namespace semilab {

  // A total map {0..n-1} -> {0..n-1}; t[q] is the image of q.
  using Transformation = std::vector<std::uint32_t>;

  inline constexpr std::size_t default_transformation_cap = 10000;

  // Transformations act on the right: (f * g)[q] = g[f[q]], so the element
  // of a word a1...ak is "apply a1 first".
  struct TransformationSemigroup {
    FiniteSemigroup             semigroup;
    std::vector<Transformation> elements;
    // generators[i] is the element index of the i-th generating map.
    std::vector<Element> generators;
  };

  // Closure of `gens` under composition, enumerated breadth first so that
  // elements appear in shortlex order of their shortest representative.
  // When labels are given (one char per generator), element names are those
  // representatives.  Throws ExplosionCap past `cap` elements.
  TransformationSemigroup
  transformation_semigroup(std::vector<Transformation> const& gens,
                           std::string const&                 labels = {},
                           std::size_t cap  = default_transformation_cap,
                           std::string name = {});

}  // namespace semilab
