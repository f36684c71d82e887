#pragma once

// Finite semigroups given by their Cayley tables.
//
// Elements are the integers 0, ..., order() - 1 and the index is the identity
// of an element; names are only used for display and JSON output.  A
// FiniteSemigroup is validated on construction (table shape, index range,
// associativity) and is immutable afterwards.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semilab {

  using Element = std::uint32_t;

  class FiniteSemigroup {
   public:
    // `table` is row major: table[i * order + j] is the product of i and j.
    FiniteSemigroup(std::size_t              order,
                    std::vector<Element>     table,
                    std::vector<std::string> names = {},
                    std::string              name  = {});

    std::size_t order() const noexcept {
      return order_;
    }

    Element product(Element a, Element b) const noexcept {
      return table_[static_cast<std::size_t>(a) * order_ + b];
    }

    Element operator()(Element a, Element b) const noexcept {
      return product(a, b);
    }

    std::span<Element const> row(Element a) const noexcept {
      return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
    }

    std::vector<Element> const& table() const noexcept {
      return table_;
    }

    std::optional<Element> identity() const noexcept {
      return identity_;
    }

    std::string const& name() const noexcept {
      return name_;
    }

    // Empty when no names were supplied.
    std::vector<std::string> const& element_names() const noexcept {
      return names_;
    }

    // Display name: the supplied name, or the decimal index.
    std::string element_name(Element a) const;

    std::optional<Element> find_element(std::string const& name) const;

    bool is_idempotent(Element a) const noexcept {
      return product(a, a) == a;
    }

    // Positive powers only; n >= 1.
    Element power(Element a, std::size_t n) const;

    // The monogenic subsemigroup <a> = {a, a^2, ...} has index `index` and
    // period `period`: a^index = a^(index + period), both minimal.
    std::size_t index_of(Element a) const noexcept {
      return monogenic_[a].index;
    }
    std::size_t period_of(Element a) const noexcept {
      return monogenic_[a].period;
    }

    // The unique idempotent power of a.
    Element omega(Element a) const noexcept {
      return monogenic_[a].omega;
    }

    // a^(omega + k) for any integer k.
    Element omega_power(Element a, long long k) const;

    FiniteSemigroup renamed(std::string name) const;

    friend bool operator==(FiniteSemigroup const& x,
                           FiniteSemigroup const& y) noexcept {
      return x.order_ == y.order_ && x.table_ == y.table_;
    }

   private:
    struct Monogenic {
      std::size_t index;
      std::size_t period;
      Element     omega;
    };

    std::size_t              order_;
    std::vector<Element>     table_;
    std::optional<Element>   identity_;
    std::vector<std::string> names_;
    std::string              name_;
    std::vector<Monogenic>   monogenic_;
  };

  namespace detail {
    // Greedy generating set of the magma with the given row-major table:
    // indecomposable elements first, then missing elements in index order.
    std::vector<Element> greedy_generators(std::size_t                 order,
                                           std::vector<Element> const& table);
  }  // namespace detail

  // Validating constructor from rows; throws IndexOutOfRange for shape and
  // range problems and NonAssociative with a witness triple.
  FiniteSemigroup build_semigroup(std::size_t                            order,
                                  std::vector<std::vector<Element>> const& rows,
                                  std::vector<std::string> names = {},
                                  std::string              name  = {});

  // Free-function form of FiniteSemigroup::omega_power.
  Element omega_power(FiniteSemigroup const& s, Element a, long long k);

  // Some well-known small semigroups used by tests, examples and the CLI.
  namespace named {
    // Five-element Brandt semigroup with elements a=E12, b=E21, ab=E11,
    // ba=E22, 0 in that index order.
    FiniteSemigroup brandt_b2();
    FiniteSemigroup cyclic_group(std::size_t n);
    FiniteSemigroup klein_four();
    // Permutations of {0,1,2}, composed left to right.
    FiniteSemigroup symmetric_group_s3();
    // {s_1, ..., s_{n-1}, 0} with every product equal to 0 (index n-1).
    FiniteSemigroup null_semigroup(std::size_t n);
    // The two-element semilattice {1, 0}.
    FiniteSemigroup semilattice2();
    FiniteSemigroup trivial();
    // <x | x^(index+period) = x^index>, elements x, x^2, ... in order.
    FiniteSemigroup monogenic(std::size_t index, std::size_t period);
  }  // namespace named

}  // namespace semilab
