#include "semilab/transformation.hpp"

#include <map>

#include "semilab/error.hpp"

namespace semilab {

  namespace {
    Transformation compose(Transformation const& f, Transformation const& g) {
      Transformation h(f.size());
      for (std::size_t q = 0; q < f.size(); ++q) {
        h[q] = g[f[q]];
      }
      return h;
    }
  }  // namespace

  TransformationSemigroup
  transformation_semigroup(std::vector<Transformation> const& gens,
                           std::string const&                 labels,
                           std::size_t                        cap,
                           std::string                        name) {
    if (gens.empty()) {
      throw EmptyGeneratorSet();
    }
    std::size_t const degree = gens.front().size();
    for (auto const& g : gens) {
      if (g.size() != degree) {
        throw InputError("generators act on different numbers of points");
      }
      for (auto q : g) {
        if (q >= degree) {
          throw InputError("transformation value out of range");
        }
      }
    }
    bool const named = labels.size() == gens.size();

    std::map<Transformation, Element> index;
    std::vector<Transformation>       elements;
    std::vector<std::string>          words;
    std::vector<Element>              generators;
    // every non-generator element is parent * gens[last]
    std::vector<std::pair<Element, std::size_t>> parent;
    std::vector<std::vector<Element>>            right;  // x * gens[i]
    auto const add = [&](Transformation t, std::string word,
                         std::pair<Element, std::size_t> from) -> Element {
      auto [it, inserted] = index.emplace(std::move(t), 0);
      if (inserted) {
        if (elements.size() == cap) {
          throw ExplosionCap(cap);
        }
        it->second = static_cast<Element>(elements.size());
        elements.push_back(it->first);
        words.push_back(std::move(word));
        parent.push_back(from);
      }
      return it->second;
    };
    auto const no_parent = std::pair{Element{0}, gens.size()};
    for (std::size_t i = 0; i < gens.size(); ++i) {
      generators.push_back(add(gens[i],
                               named ? std::string(1, labels[i]) : std::string(),
                               no_parent));
    }
    for (std::size_t head = 0; head < elements.size(); ++head) {
      right.emplace_back(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i) {
        right[head][i] = add(compose(elements[head], gens[i]),
                             named ? words[head] + labels[i] : std::string(),
                             {static_cast<Element>(head), i});
      }
    }

    // x * y follows the word of y through the right Cayley graph; parents
    // come before children, so each entry needs one step
    std::size_t const    n = elements.size();
    std::vector<Element> table(n * n);
    std::vector<std::size_t> generator_slot(n, gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (generator_slot[generators[i]] == gens.size()) {
        generator_slot[generators[i]] = i;
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        table[x * n + y]
            = parent[y].second == gens.size()
                  ? right[x][generator_slot[y]]
                  : right[table[x * n + parent[y].first]][parent[y].second];
      }
    }
    if (!named) {
      words.clear();
    }
    return {FiniteSemigroup(n, std::move(table), std::move(words),
                            std::move(name)),
            std::move(elements),
            std::move(generators)};
  }

}  // namespace semilab
