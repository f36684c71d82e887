#include "semilab/corpus.hpp"

#include <random>

#include "semilab/error.hpp"
#include "semilab/isomorphism.hpp"
#include "semilab/transformation.hpp"

namespace semilab {

  std::vector<FiniteSemigroup> exhaustive_semigroups(std::size_t order) {
    if (order > max_exhaustive_order) {
      throw TooLarge(order, max_exhaustive_order);
    }
    if (order == 0) {
      return {};
    }
    std::size_t const    cells = order * order;
    std::vector<Element> table(cells, 0);
    std::vector<FiniteSemigroup> found;
    while (true) {
      bool associative = true;
      for (std::size_t i = 0; i < order && associative; ++i) {
        for (std::size_t j = 0; j < order && associative; ++j) {
          for (std::size_t k = 0; k < order && associative; ++k) {
            associative = table[table[i * order + j] * order + k]
                          == table[i * order + table[j * order + k]];
          }
        }
      }
      if (associative) {
        FiniteSemigroup s(order, table);
        bool            fresh = true;
        for (auto const& t : found) {
          if (is_isomorphic(s, t)) {
            fresh = false;
            break;
          }
        }
        if (fresh) {
          found.push_back(s.renamed("S" + std::to_string(order) + "_"
                                    + std::to_string(found.size())));
        }
      }
      // next table in lexicographic order (last cell fastest)
      std::size_t p = cells;
      while (p > 0 && table[p - 1] + 1 == order) {
        table[--p] = 0;
      }
      if (p == 0) {
        break;
      }
      ++table[p - 1];
    }
    return found;
  }

  std::vector<FiniteSemigroup> exhaustive_corpus(std::size_t max_order) {
    std::vector<FiniteSemigroup> all;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto part = exhaustive_semigroups(n);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }

  FiniteSemigroup random_transformation_semigroup(std::size_t   degree,
                                                  std::size_t   generators,
                                                  std::uint64_t seed) {
    if (degree == 0 || generators == 0) {
      throw InputError("degree and generator count must be positive");
    }
    std::mt19937_64             rng(seed);
    std::vector<Transformation> gens(generators, Transformation(degree));
    for (auto& g : gens) {
      for (auto& q : g) {
        q = static_cast<std::uint32_t>(rng() % degree);
      }
    }
    return transformation_semigroup(gens, {}, default_transformation_cap,
                                    "T" + std::to_string(degree) + "/"
                                        + std::to_string(generators) + "#"
                                        + std::to_string(seed))
        .semigroup;
  }

  PiecewiseMember piecewise_member(std::vector<char> const& alphabet,
                                   std::string const&       subword) {
    // state i: the longest matched prefix of `subword` has length i
    std::size_t const           k = subword.size();
    std::vector<Transformation> gens;
    std::string                 labels(alphabet.begin(), alphabet.end());
    for (char c : alphabet) {
      Transformation t(k + 1);
      for (std::size_t i = 0; i <= k; ++i) {
        t[i] = static_cast<std::uint32_t>(i < k && subword[i] == c ? i + 1 : i);
      }
      gens.push_back(std::move(t));
    }
    auto ts = transformation_semigroup(gens, labels,
                                       default_transformation_cap,
                                       "PT(" + subword + ")");
    return {subword, LetterMorphism(alphabet, std::move(ts.semigroup),
                                    std::move(ts.generators),
                                    MorphismMode::semigroup)};
  }

  std::vector<PiecewiseMember>
  piecewise_syntactic(std::vector<char> const& alphabet,
                      std::size_t              max_length) {
    std::vector<PiecewiseMember> result;
    std::vector<std::string>     layer = {""};
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<std::string> next;
      for (auto const& w : layer) {
        for (char c : alphabet) {
          next.push_back(w + c);
        }
      }
      for (auto const& w : next) {
        result.push_back(piecewise_member(alphabet, w));
      }
      layer = std::move(next);
    }
    return result;
  }

  std::vector<FiniteSemigroup> small_corpus(CorpusSpec const& spec) {
    struct Visitor {
      std::vector<FiniteSemigroup> operator()(Exhaustive const& e) const {
        return exhaustive_corpus(e.max_order);
      }
      std::vector<FiniteSemigroup>
      operator()(RandomTransformation const& r) const {
        std::vector<FiniteSemigroup> result;
        for (std::size_t i = 0; i < r.count; ++i) {
          result.push_back(random_transformation_semigroup(
              r.degree, r.generators, r.seed + i));
        }
        return result;
      }
      std::vector<FiniteSemigroup>
      operator()(PiecewiseSyntactic const& p) const {
        std::vector<FiniteSemigroup> result;
        for (auto& m : piecewise_syntactic(p.alphabet, p.max_length)) {
          result.push_back(m.semigroup());
        }
        return result;
      }
    };
    return std::visit(Visitor{}, spec);
  }

}  // namespace semilab
