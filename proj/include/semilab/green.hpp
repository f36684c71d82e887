#pragma once

#include <cstddef>
#include <vector>

#include "semilab/semigroup.hpp"

namespace semilab {

  // A square boolean relation on the elements of a semigroup.
  class Relation {
   public:
    explicit Relation(std::size_t n = 0) : n_(n), bits_(n * n, 0) {}

    bool operator()(Element s, Element t) const noexcept {
      return bits_[static_cast<std::size_t>(s) * n_ + t] != 0;
    }
    void set(Element s, Element t) noexcept {
      bits_[static_cast<std::size_t>(s) * n_ + t] = 1;
    }
    std::size_t size() const noexcept {
      return n_;
    }
    friend bool operator==(Relation const&, Relation const&) = default;

   private:
    std::size_t               n_;
    std::vector<unsigned char> bits_;
  };

  using Partition = std::vector<std::vector<Element>>;

  // Green's quasi-orders, their classes, idempotents and regular elements.
  //
  // leq_r(s, t) holds iff s lies in t S^I; leq_l(s, t) iff s in S^I t; and
  // leq_j(s, t) iff s in S^I t S^I.  Classes are listed by their least element
  // and each class is sorted.
  struct GreenSummary {
    Relation  leq_r, leq_l, leq_j;
    Partition r_classes, l_classes, j_classes, h_classes;
    // class_of[x] is the position of x's class in the partition above.
    std::vector<std::size_t> r_class_of, l_class_of, j_class_of, h_class_of;
    std::vector<Element>     idempotents;
    std::vector<Element>     regular;

    bool r_equivalent(Element s, Element t) const {
      return r_class_of[s] == r_class_of[t];
    }
    bool l_equivalent(Element s, Element t) const {
      return l_class_of[s] == l_class_of[t];
    }
    bool j_equivalent(Element s, Element t) const {
      return j_class_of[s] == j_class_of[t];
    }
    bool is_regular(Element s) const;
    // s <_R t: s <=_R t but not t <=_R s.
    bool strictly_below_r(Element s, Element t) const {
      return leq_r(s, t) && !leq_r(t, s);
    }
    bool strictly_below_l(Element s, Element t) const {
      return leq_l(s, t) && !leq_l(t, s);
    }
  };

  // Reachability in the left and right Cayley graphs over a generating set.
  GreenSummary green(FiniteSemigroup const& s);

}  // namespace semilab
