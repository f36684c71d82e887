#include "semilab/green.hpp"

#include <algorithm>

#include "semilab/construct.hpp"

namespace semilab {

  namespace {

    enum class Side { right, left, both };

    // reach(s, t) == true iff s is reachable from t by multiplying with
    // generators on the given side(s); t itself counts (the I in S^I).
    Relation reachability(FiniteSemigroup const&      s,
                          std::vector<Element> const& gens,
                          Side                        side) {
      std::size_t const n = s.order();
      Relation          rel(n);
      std::vector<unsigned char> seen(n);
      std::vector<Element>       queue;
      for (Element t = 0; t < n; ++t) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.assign(1, t);
        seen[t] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          Element const x = queue[head];
          rel.set(x, t);
          for (Element g : gens) {
            if (side != Side::left) {
              Element const y = s(x, g);
              if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
              }
            }
            if (side != Side::right) {
              Element const y = s(g, x);
              if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
              }
            }
          }
        }
      }
      return rel;
    }

    // Classes of the equivalence "leq both ways", numbered by least element.
    void classes_of(Relation const&           leq,
                    Partition&                classes,
                    std::vector<std::size_t>& class_of) {
      std::size_t const n = leq.size();
      class_of.assign(n, n);
      for (Element x = 0; x < n; ++x) {
        if (class_of[x] != n) {
          continue;
        }
        class_of[x] = classes.size();
        classes.push_back({x});
        for (Element y = x + 1; y < n; ++y) {
          if (class_of[y] == n && leq(x, y) && leq(y, x)) {
            class_of[y] = class_of[x];
            classes.back().push_back(y);
          }
        }
      }
    }

  }  // namespace

  bool GreenSummary::is_regular(Element s) const {
    return std::binary_search(regular.begin(), regular.end(), s);
  }

  GreenSummary green(FiniteSemigroup const& s) {
    auto const   gens = generating_set(s);
    GreenSummary g;
    g.leq_r = reachability(s, gens, Side::right);
    g.leq_l = reachability(s, gens, Side::left);
    g.leq_j = reachability(s, gens, Side::both);
    classes_of(g.leq_r, g.r_classes, g.r_class_of);
    classes_of(g.leq_l, g.l_classes, g.l_class_of);
    classes_of(g.leq_j, g.j_classes, g.j_class_of);

    std::size_t const n = s.order();
    g.h_class_of.assign(n, n);
    for (Element x = 0; x < n; ++x) {
      if (g.h_class_of[x] != n) {
        continue;
      }
      g.h_class_of[x] = g.h_classes.size();
      g.h_classes.push_back({x});
      for (Element y = x + 1; y < n; ++y) {
        if (g.h_class_of[y] == n && g.r_equivalent(x, y)
            && g.l_equivalent(x, y)) {
          g.h_class_of[y] = g.h_class_of[x];
          g.h_classes.back().push_back(y);
        }
      }
    }

    // a J-class of a finite semigroup is regular iff it holds an idempotent
    std::vector<unsigned char> regular_class(g.j_classes.size(), 0);
    for (Element x = 0; x < n; ++x) {
      if (s.is_idempotent(x)) {
        g.idempotents.push_back(x);
        regular_class[g.j_class_of[x]] = 1;
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (regular_class[g.j_class_of[x]]) {
        g.regular.push_back(x);
      }
    }
    return g;
  }

}  // namespace semilab
