#include "semilab/semigroup.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "semilab/error.hpp"

namespace semilab {

  namespace detail {

    std::vector<Element> greedy_generators(std::size_t                 n,
                                           std::vector<Element> const& table) {
      std::vector<unsigned char> in(n, 0);
      std::vector<Element>       gens, queue;
      auto const                 close = [&] {
        std::fill(in.begin(), in.end(), 0);
        queue = gens;
        for (Element g : gens) {
          in[g] = 1;
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
          for (Element g : gens) {
            Element const y = table[queue[head] * n + g];
            if (!in[y]) {
              in[y] = 1;
              queue.push_back(y);
            }
          }
        }
      };
      // indecomposable elements belong to every generating set
      std::vector<unsigned char> decomposable(n, 0);
      for (Element x : table) {
        decomposable[x] = 1;
      }
      for (Element x = 0; x < n; ++x) {
        if (!decomposable[x]) {
          gens.push_back(x);
        }
      }
      close();
      for (Element x = 0; x < n; ++x) {
        if (!in[x]) {
          gens.push_back(x);
          close();
        }
      }
      return gens;
    }

  }  // namespace detail

  FiniteSemigroup::FiniteSemigroup(std::size_t              order,
                                   std::vector<Element>     table,
                                   std::vector<std::string> names,
                                   std::string              name)
      : order_(order),
        table_(std::move(table)),
        names_(std::move(names)),
        name_(std::move(name)) {
    if (order_ == 0) {
      throw IndexOutOfRange(0, 0, "a semigroup must have at least one element");
    }
    if (table_.size() != order_ * order_) {
      throw IndexOutOfRange(table_.size() / order_,
                            table_.size() % order_,
                            "table must have order*order entries");
    }
    for (std::size_t p = 0; p < table_.size(); ++p) {
      if (table_[p] >= order_) {
        throw IndexOutOfRange(p / order_,
                              p % order_,
                              "value " + std::to_string(table_[p])
                                  + " is not below the order "
                                  + std::to_string(order_));
      }
    }
    if (!names_.empty() && names_.size() != order_) {
      throw InputError("expected " + std::to_string(order_)
                       + " element names, got "
                       + std::to_string(names_.size()));
    }
    // Light's test: the elements g with (xy)g = x(yg) for all x, y form a
    // submagma, so checking a generating set suffices.
    for (Element k : detail::greedy_generators(order_, table_)) {
      for (Element i = 0; i < order_; ++i) {
        for (Element j = 0; j < order_; ++j) {
          if (product(product(i, j), k) != product(i, product(j, k))) {
            throw NonAssociative(i, j, k);
          }
        }
      }
    }
    for (Element e = 0; e < order_ && !identity_; ++e) {
      bool neutral = true;
      for (Element x = 0; x < order_ && neutral; ++x) {
        neutral = product(e, x) == x && product(x, e) == x;
      }
      if (neutral) {
        identity_ = e;
      }
    }

    // index and period of every monogenic subsemigroup
    monogenic_.resize(order_);
    std::vector<std::size_t> seen(order_, 0);
    std::vector<Element>     touched;
    for (Element a = 0; a < order_; ++a) {
      touched.clear();
      Element     x = a;
      std::size_t m = 1;
      while (seen[x] == 0) {
        seen[x] = m;
        touched.push_back(x);
        x = product(x, a);
        ++m;
      }
      std::size_t const index  = seen[x];
      std::size_t const period = m - index;
      for (Element t : touched) {
        seen[t] = 0;
      }
      std::size_t const e = period * ((index + period - 1) / period);
      monogenic_[a]       = {index, period, power(a, e)};
    }
  }

  std::string FiniteSemigroup::element_name(Element a) const {
    if (!names_.empty()) {
      return names_[a];
    }
    return std::to_string(a);
  }

  std::optional<Element>
  FiniteSemigroup::find_element(std::string const& name) const {
    for (Element a = 0; a < order_; ++a) {
      if (element_name(a) == name) {
        return a;
      }
    }
    return std::nullopt;
  }

  Element FiniteSemigroup::power(Element a, std::size_t n) const {
    // square and multiply; n >= 1
    Element result = a;
    --n;
    Element base = a;
    while (n > 0) {
      if (n & 1) {
        result = product(result, base);
      }
      base = product(base, base);
      n >>= 1;
    }
    return result;
  }

  Element FiniteSemigroup::omega_power(Element a, long long k) const {
    auto const index  = static_cast<long long>(monogenic_[a].index);
    auto const period = static_cast<long long>(monogenic_[a].period);
    long long const r = ((k % period) + period) % period;
    long long const m = index + (((r - index) % period) + period) % period;
    return power(a, static_cast<std::size_t>(m));
  }

  FiniteSemigroup FiniteSemigroup::renamed(std::string name) const {
    FiniteSemigroup copy = *this;
    copy.name_           = std::move(name);
    return copy;
  }

  FiniteSemigroup build_semigroup(std::size_t                              order,
                                  std::vector<std::vector<Element>> const& rows,
                                  std::vector<std::string>                 names,
                                  std::string                              name) {
    if (rows.size() != order) {
      throw IndexOutOfRange(rows.size(), 0, "expected " + std::to_string(order)
                                                + " rows");
    }
    std::vector<Element> flat;
    flat.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i) {
      if (rows[i].size() != order) {
        throw IndexOutOfRange(i, rows[i].size(),
                              "expected " + std::to_string(order)
                                  + " columns");
      }
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return FiniteSemigroup(order, std::move(flat), std::move(names),
                           std::move(name));
  }

  Element omega_power(FiniteSemigroup const& s, Element a, long long k) {
    return s.omega_power(a, k);
  }

  namespace named {

    FiniteSemigroup brandt_b2() {
      // matrix units E_ij as (i, j); index 4 is the zero
      std::array<std::pair<int, int>, 4> const unit
          = {{{1, 2}, {2, 1}, {1, 1}, {2, 2}}};
      auto const find = [&](int i, int j) -> Element {
        for (Element k = 0; k < 4; ++k) {
          if (unit[k] == std::pair{i, j}) {
            return k;
          }
        }
        return 4;
      };
      std::vector<Element> table(25, 4);
      for (Element x = 0; x < 4; ++x) {
        for (Element y = 0; y < 4; ++y) {
          if (unit[x].second == unit[y].first) {
            table[x * 5 + y] = find(unit[x].first, unit[y].second);
          }
        }
      }
      return FiniteSemigroup(5, std::move(table), {"a", "b", "ab", "ba", "0"},
                             "B2");
    }

    FiniteSemigroup cyclic_group(std::size_t n) {
      std::vector<Element> table(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          table[i * n + j] = static_cast<Element>((i + j) % n);
        }
      }
      return FiniteSemigroup(n, std::move(table), {},
                             "Z" + std::to_string(n));
    }

    FiniteSemigroup klein_four() {
      std::vector<Element> table(16);
      for (Element i = 0; i < 4; ++i) {
        for (Element j = 0; j < 4; ++j) {
          table[i * 4 + j] = i ^ j;
        }
      }
      return FiniteSemigroup(4, std::move(table), {}, "Z2xZ2");
    }

    FiniteSemigroup symmetric_group_s3() {
      std::vector<std::array<int, 3>> perms;
      std::array<int, 3>              p = {0, 1, 2};
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::vector<Element> table(36);
      for (Element i = 0; i < 6; ++i) {
        for (Element j = 0; j < 6; ++j) {
          std::array<int, 3> c{};
          for (int x = 0; x < 3; ++x) {
            c[x] = perms[j][perms[i][x]];
          }
          table[i * 6 + j] = static_cast<Element>(
              std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
      }
      return FiniteSemigroup(6, std::move(table), {}, "S3");
    }

    FiniteSemigroup null_semigroup(std::size_t n) {
      std::vector<Element> table(n * n, static_cast<Element>(n - 1));
      std::vector<std::string> names;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        names.push_back("s" + std::to_string(i + 1));
      }
      names.emplace_back("0");
      return FiniteSemigroup(n, std::move(table), std::move(names),
                             "N" + std::to_string(n));
    }

    FiniteSemigroup semilattice2() {
      return FiniteSemigroup(2, {0, 1, 1, 1}, {"1", "0"}, "U1");
    }

    FiniteSemigroup trivial() {
      return FiniteSemigroup(1, {0}, {}, "I");
    }

    FiniteSemigroup monogenic(std::size_t index, std::size_t period) {
      std::size_t const    n = index + period - 1;
      std::vector<Element> table(n * n);
      std::vector<std::string> names;
      auto const reduce = [&](std::size_t e) {
        return e < index + period ? e : index + (e - index) % period;
      };
      for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
        for (std::size_t j = 1; j <= n; ++j) {
          table[(i - 1) * n + (j - 1)]
              = static_cast<Element>(reduce(i + j) - 1);
        }
      }
      return FiniteSemigroup(n, std::move(table), std::move(names),
                             "C(" + std::to_string(index) + ","
                                 + std::to_string(period) + ")");
    }

  }  // namespace named
}  // namespace semilab
