#include "semilab/isomorphism.hpp"

#include <algorithm>
#include <array>

#include "semilab/construct.hpp"
#include "semilab/error.hpp"
#include "semilab/green.hpp"

namespace semilab {

  namespace {

    using Invariant = std::array<std::size_t, 11>;

    std::vector<Invariant> invariants(FiniteSemigroup const& s) {
      auto const        g = green(s);
      std::size_t const n = s.order();
      std::vector<Invariant> result(n);
      std::vector<unsigned char> mark(n);
      for (Element x = 0; x < n; ++x) {
        std::fill(mark.begin(), mark.end(), 0);
        std::size_t row = 0, col = 0;
        for (Element y = 0; y < n; ++y) {
          row += mark[s(x, y)]++ == 0;
        }
        std::fill(mark.begin(), mark.end(), 0);
        for (Element y = 0; y < n; ++y) {
          col += mark[s(y, x)]++ == 0;
        }
        std::size_t roots = 0;
        for (Element y = 0; y < n; ++y) {
          roots += s(y, y) == x;
        }
        result[x] = {s.is_idempotent(x),
                     s.index_of(x),
                     s.period_of(x),
                     g.r_classes[g.r_class_of[x]].size(),
                     g.l_classes[g.l_class_of[x]].size(),
                     g.j_classes[g.j_class_of[x]].size(),
                     g.h_classes[g.h_class_of[x]].size(),
                     g.is_regular(x),
                     row,
                     col,
                     roots};
      }
      return result;
    }

    class Search {
     public:
      Search(FiniteSemigroup const& s, FiniteSemigroup const& t)
          : s_(s),
            t_(t),
            inv_s_(invariants(s)),
            inv_t_(invariants(t)),
            gens_(generating_set(s)) {}

      std::optional<std::vector<Element>> run() {
        auto a = inv_s_, b = inv_t_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        images_.clear();
        if (assign(0)) {
          return map_;
        }
        return std::nullopt;
      }

     private:
      bool assign(std::size_t k) {
        if (k == gens_.size()) {
          return extend() && map_complete();
        }
        for (Element c = 0; c < t_.order(); ++c) {
          if (inv_t_[c] != inv_s_[gens_[k]]) {
            continue;
          }
          images_.push_back(c);
          if (extend() && assign(k + 1)) {
            return true;
          }
          images_.pop_back();
        }
        return false;
      }

      // Propagates the partial assignment through <gens_[0..k)>.
      bool extend() {
        std::size_t const n   = s_.order();
        std::size_t const k   = images_.size();
        constexpr Element unset = static_cast<Element>(-1);
        map_.assign(n, unset);
        std::vector<unsigned char> used(t_.order(), 0);
        std::vector<Element>       queue;
        auto const set = [&](Element x, Element y) {
          if (map_[x] != unset) {
            return map_[x] == y;
          }
          if (used[y] || inv_s_[x] != inv_t_[y]) {
            return false;
          }
          map_[x] = y;
          used[y] = 1;
          queue.push_back(x);
          return true;
        };
        for (std::size_t i = 0; i < k; ++i) {
          if (!set(gens_[i], images_[i])) {
            return false;
          }
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
          Element const x = queue[head];
          for (std::size_t i = 0; i < k; ++i) {
            if (!set(s_(x, gens_[i]), t_(map_[x], images_[i]))) {
              return false;
            }
          }
        }
        return true;
      }

      bool map_complete() const {
        return is_isomorphism(s_, t_, map_);
      }

      FiniteSemigroup const& s_;
      FiniteSemigroup const& t_;
      std::vector<Invariant> inv_s_, inv_t_;
      std::vector<Element>   gens_;
      std::vector<Element>   images_;
      std::vector<Element>   map_;
    };

  }  // namespace

  bool is_isomorphism(FiniteSemigroup const&      s,
                      FiniteSemigroup const&      t,
                      std::vector<Element> const& map) {
    if (s.order() != t.order() || map.size() != s.order()) {
      return false;
    }
    std::vector<unsigned char> hit(t.order(), 0);
    for (Element y : map) {
      if (y >= t.order() || hit[y]) {
        return false;
      }
      hit[y] = 1;
    }
    for (Element x = 0; x < s.order(); ++x) {
      for (Element y = 0; y < s.order(); ++y) {
        if (map[s(x, y)] != t(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<Element>>
  find_isomorphism(FiniteSemigroup const& s,
                   FiniteSemigroup const& t,
                   bool                   respect_identity,
                   std::size_t            bound) {
    if (s.order() > bound) {
      throw TooLarge(s.order(), bound);
    }
    if (t.order() > bound) {
      throw TooLarge(t.order(), bound);
    }
    if (s.order() != t.order()) {
      return std::nullopt;
    }
    if (respect_identity
        && s.identity().has_value() != t.identity().has_value()) {
      return std::nullopt;
    }
    return Search(s, t).run();
  }

  bool is_isomorphic(FiniteSemigroup const& s,
                     FiniteSemigroup const& t,
                     bool                   respect_identity,
                     std::size_t            bound) {
    return find_isomorphism(s, t, respect_identity, bound).has_value();
  }

  std::optional<std::vector<Element>>
  extend_to_isomorphism(FiniteSemigroup const&   s,
                        std::span<Element const> s_gens,
                        FiniteSemigroup const&   t,
                        std::span<Element const> t_gens) {
    if (s.order() != t.order() || s_gens.size() != t_gens.size()) {
      return std::nullopt;
    }
    constexpr Element    unset = static_cast<Element>(-1);
    std::vector<Element> map(s.order(), unset);
    std::vector<Element> queue;
    auto const           set = [&](Element x, Element y) {
      if (map[x] == unset) {
        map[x] = y;
        queue.push_back(x);
        return true;
      }
      return map[x] == y;
    };
    for (std::size_t i = 0; i < s_gens.size(); ++i) {
      if (!set(s_gens[i], t_gens[i])) {
        return std::nullopt;
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Element const x = queue[head];
      for (std::size_t i = 0; i < s_gens.size(); ++i) {
        if (!set(s(x, s_gens[i]), t(map[x], t_gens[i]))) {
          return std::nullopt;
        }
      }
    }
    if (queue.size() != s.order() || !is_isomorphism(s, t, map)) {
      return std::nullopt;
    }
    return map;
  }

  FiniteSemigroup permuted(FiniteSemigroup const&      s,
                           std::vector<Element> const& perm) {
    std::size_t const    n = s.order();
    std::vector<Element> table(n * n);
    std::vector<std::string> names(s.element_names().empty() ? 0 : n);
    for (Element x = 0; x < n; ++x) {
      if (!names.empty()) {
        names[perm[x]] = s.element_name(x);
      }
      for (Element y = 0; y < n; ++y) {
        table[perm[x] * n + perm[y]] = perm[s(x, y)];
      }
    }
    return FiniteSemigroup(n, std::move(table), std::move(names), s.name());
  }

}  // namespace semilab
