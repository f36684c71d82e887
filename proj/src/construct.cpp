#include "semilab/construct.hpp"

#include <algorithm>
#include <numeric>

#include "semilab/error.hpp"
#include "semilab/green.hpp"

namespace semilab {

  namespace {

    // Right Cayley graph search from the generators.
    std::vector<unsigned char> closure_mask(FiniteSemigroup const&   s,
                                            std::span<Element const> gens) {
      std::vector<unsigned char> in(s.order(), 0);
      std::vector<Element>       queue;
      for (Element g : gens) {
        if (!in[g]) {
          in[g] = 1;
          queue.push_back(g);
        }
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Element const x = queue[head];
        for (Element g : gens) {
          Element const y = s(x, g);
          if (!in[y]) {
            in[y] = 1;
            queue.push_back(y);
          }
        }
      }
      return in;
    }

    Subsemigroup restrict_to(FiniteSemigroup const&      s,
                             std::vector<Element> const& elements,
                             std::string                 name) {
      std::vector<Element> position(s.order(), 0);
      for (std::size_t i = 0; i < elements.size(); ++i) {
        position[elements[i]] = static_cast<Element>(i);
      }
      std::size_t const    n = elements.size();
      std::vector<Element> table(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          table[i * n + j] = position[s(elements[i], elements[j])];
        }
      }
      std::vector<std::string> names;
      if (!s.element_names().empty()) {
        for (Element x : elements) {
          names.push_back(s.element_name(x));
        }
      }
      return {FiniteSemigroup(n, std::move(table), std::move(names),
                              std::move(name)),
              elements};
    }

    Element find_root(std::vector<Element>& parent, Element x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

  }  // namespace

  AdjoinedIdentity adjoin_identity(FiniteSemigroup const& s) {
    std::size_t const    n   = s.order();
    auto const           one = static_cast<Element>(n);
    std::vector<Element> table((n + 1) * (n + 1));
    for (Element i = 0; i <= n; ++i) {
      for (Element j = 0; j <= n; ++j) {
        Element v;
        if (i == one) {
          v = j;
        } else if (j == one) {
          v = i;
        } else {
          v = s(i, j);
        }
        table[i * (n + 1) + j] = v;
      }
    }
    std::vector<std::string> names;
    for (Element i = 0; i < n; ++i) {
      names.push_back(s.element_name(i));
    }
    names.emplace_back("I");
    std::vector<Element> embedding(n);
    std::iota(embedding.begin(), embedding.end(), Element{0});
    std::string const name = s.name().empty() ? "" : s.name() + "^I";
    return {FiniteSemigroup(n + 1, std::move(table), std::move(names), name),
            std::move(embedding),
            one};
  }

  Subsemigroup local_subsemigroup(FiniteSemigroup const& s, Element e) {
    if (e >= s.order() || !s.is_idempotent(e)) {
      throw NotIdempotent(e);
    }
    std::vector<unsigned char> in(s.order(), 0);
    for (Element x = 0; x < s.order(); ++x) {
      in[s(s(e, x), e)] = 1;
    }
    std::vector<Element> elements;
    for (Element x = 0; x < s.order(); ++x) {
      if (in[x]) {
        elements.push_back(x);
      }
    }
    return restrict_to(s, elements,
                       s.name().empty() ? ""
                                        : s.name() + "_e" + std::to_string(e));
  }

  std::vector<Element> closure_of(FiniteSemigroup const&   s,
                                  std::span<Element const> generators) {
    auto const           in = closure_mask(s, generators);
    std::vector<Element> elements;
    for (Element x = 0; x < s.order(); ++x) {
      if (in[x]) {
        elements.push_back(x);
      }
    }
    return elements;
  }

  Subsemigroup generated_subsemigroup(FiniteSemigroup const&   s,
                                      std::span<Element const> generators) {
    if (generators.empty()) {
      throw EmptyGeneratorSet();
    }
    for (Element g : generators) {
      if (g >= s.order()) {
        throw IndexOutOfRange(g, 0, "generator is not an element");
      }
    }
    return restrict_to(s, closure_of(s, generators), s.name());
  }

  DirectProduct direct_product(FiniteSemigroup const& s,
                               FiniteSemigroup const& t) {
    std::size_t const    m = s.order(), n = t.order(), mn = m * n;
    std::vector<Element> table(mn * mn);
    std::vector<std::pair<Element, Element>> components(mn);
    std::vector<std::string>                 names(mn);
    for (Element a = 0; a < m; ++a) {
      for (Element b = 0; b < n; ++b) {
        components[a * n + b] = {a, b};
        names[a * n + b] = "(" + s.element_name(a) + "," + t.element_name(b)
                           + ")";
      }
    }
    for (std::size_t x = 0; x < mn; ++x) {
      for (std::size_t y = 0; y < mn; ++y) {
        auto [a, b]         = components[x];
        auto [c, d]         = components[y];
        table[x * mn + y]   = static_cast<Element>(s(a, c) * n + t(b, d));
      }
    }
    std::string name;
    if (!s.name().empty() || !t.name().empty()) {
      name = s.name() + "x" + t.name();
    }
    return {FiniteSemigroup(mn, std::move(table), std::move(names),
                            std::move(name)),
            std::move(components)};
  }

  std::vector<Element>
  congruence_closure(FiniteSemigroup const&                       s,
                     std::span<std::pair<Element, Element> const> pairs) {
    std::size_t const    n = s.order();
    std::vector<Element> parent(n);
    std::iota(parent.begin(), parent.end(), Element{0});
    std::vector<std::pair<Element, Element>> work(pairs.begin(), pairs.end());
    for (auto [a, b] : work) {
      if (a >= n || b >= n) {
        throw IndexOutOfRange(a, b, "pair refers to a non-element");
      }
    }
    // Every merge of two classes queues the pair of their old roots; all
    // translates of merged pairs are then merged in turn.
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      Element ra = find_root(parent, a), rb = find_root(parent, b);
      if (ra == rb) {
        continue;
      }
      if (rb < ra) {
        std::swap(ra, rb);
      }
      parent[rb] = ra;
      for (Element x = 0; x < n; ++x) {
        work.emplace_back(s(x, ra), s(x, rb));
        work.emplace_back(s(ra, x), s(rb, x));
      }
    }
    std::vector<Element> least(n);
    for (Element x = 0; x < n; ++x) {
      least[x] = find_root(parent, x);
    }
    return least;
  }

  Quotient quotient(FiniteSemigroup const&                       s,
                    std::span<std::pair<Element, Element> const> pairs) {
    auto const           least = congruence_closure(s, pairs);
    std::size_t const    n     = s.order();
    std::vector<Element> projection(n);
    std::vector<Element> reps;
    for (Element x = 0; x < n; ++x) {
      if (least[x] == x) {
        projection[x] = static_cast<Element>(reps.size());
        reps.push_back(x);
      } else {
        projection[x] = projection[least[x]];
      }
    }
    std::size_t const    m = reps.size();
    std::vector<Element> table(m * m);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back("[" + s.element_name(reps[i]) + "]");
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = projection[s(reps[i], reps[j])];
      }
    }
    return {FiniteSemigroup(m, std::move(table), std::move(names), s.name()),
            std::move(projection)};
  }

  Subsemigroup regular_core(FiniteSemigroup const& s) {
    auto const g = green(s);
    return restrict_to(s, closure_of(s, g.regular), s.name());
  }

  std::vector<Element> generating_set(FiniteSemigroup const& s) {
    return detail::greedy_generators(s.order(), s.table());
  }

}  // namespace semilab
