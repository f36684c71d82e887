#pragma once

// omega-terms: letters, concatenation and powers x^(omega+k), evaluated in
// finite semigroups.
//
// Concrete syntax (whitespace is ignored):
//
//   term   := factor+
//   factor := atom [ "^w" | "^(w+INT)" | "^(w-INT)" ]
//   atom   := LETTER | "(" term ")"
//
// LETTER is any ASCII letter; "w" after "^" denotes omega.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semilab/semigroup.hpp"

namespace semilab {

  // A set of ASCII letters.
  class LetterSet {
   public:
    constexpr LetterSet() = default;

    static bool is_letter(char c) noexcept {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }
    static LetterSet of(std::string_view letters);
    static LetterSet single(char c);

    bool contains(char c) const noexcept {
      return is_letter(c) && ((bits_ >> bit(c)) & 1U);
    }
    void insert(char c);
    bool empty() const noexcept {
      return bits_ == 0;
    }
    std::size_t size() const noexcept;
    bool subset_of(LetterSet other) const noexcept {
      return (bits_ & ~other.bits_) == 0;
    }
    bool comparable(LetterSet other) const noexcept {
      return subset_of(other) || other.subset_of(*this);
    }
    LetterSet operator|(LetterSet other) const noexcept {
      return LetterSet(bits_ | other.bits_);
    }
    // Letters in a-z then A-Z order.
    std::string letters() const;

    friend bool operator==(LetterSet, LetterSet) = default;
    friend auto operator<=>(LetterSet, LetterSet) = default;

   private:
    explicit constexpr LetterSet(std::uint64_t bits) : bits_(bits) {}
    static unsigned bit(char c) noexcept {
      return c >= 'a' ? static_cast<unsigned>(c - 'a')
                      : 26U + static_cast<unsigned>(c - 'A');
    }
    std::uint64_t bits_ = 0;
  };

  class OmegaTerm {
   public:
    enum class Kind { letter, concat, power };

    static OmegaTerm letter(char c);
    // Flattens nested concatenations; a single factor is returned as is.
    static OmegaTerm concat(std::vector<OmegaTerm> factors);
    // base^(omega + shift)
    static OmegaTerm power(OmegaTerm base, long long shift = 0);

    Kind kind() const noexcept {
      return kind_;
    }
    bool is_letter() const noexcept {
      return kind_ == Kind::letter;
    }
    bool is_power() const noexcept {
      return kind_ == Kind::power;
    }
    bool is_concat() const noexcept {
      return kind_ == Kind::concat;
    }
    char symbol() const noexcept {
      return symbol_;
    }
    long long shift() const noexcept {
      return shift_;
    }
    OmegaTerm const& base() const noexcept {
      return children_.front();
    }
    // Concatenation factors; a non-concat term is its own single factor.
    std::vector<OmegaTerm> factors() const;
    std::vector<OmegaTerm> const& children() const noexcept {
      return children_;
    }

    friend bool operator==(OmegaTerm const&, OmegaTerm const&) = default;

   private:
    OmegaTerm() = default;

    Kind                   kind_   = Kind::letter;
    char                   symbol_ = 0;
    long long              shift_  = 0;
    std::vector<OmegaTerm> children_;
  };

  // Throws SyntaxError with the offending position.
  OmegaTerm parse_term(std::string_view text);

  // Canonical text; parse_term(to_string(t)) == t.
  std::string to_string(OmegaTerm const& t);

  LetterSet content(OmegaTerm const& t);

  // letter -> element for the letters in `bound`.
  class Assignment {
   public:
    void set(char letter, Element value);
    bool has(char letter) const noexcept {
      return bound_.contains(letter);
    }
    Element operator[](char letter) const;  // throws UnboundLetter
    LetterSet bound() const noexcept {
      return bound_;
    }

   private:
    std::array<Element, 128> values_{};
    LetterSet                bound_;
  };

  // Throws UnboundLetter.
  Element eval_term(OmegaTerm const&       t,
                    FiniteSemigroup const& s,
                    Assignment const&      assignment);

  struct Pseudoidentity {
    OmegaTerm lhs;
    OmegaTerm rhs;

    LetterSet variables() const {
      return content(lhs) | content(rhs);
    }
    friend bool operator==(Pseudoidentity const&,
                           Pseudoidentity const&) = default;
  };

  // "<term> = <term>"; throws SyntaxError.
  Pseudoidentity parse_pseudoidentity(std::string_view text);
  std::string    to_string(Pseudoidentity const& p);

  struct Satisfaction {
    bool                      holds = true;
    std::optional<Assignment> counterexample;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Tries all |S|^|variables| assignments, variables in letter order and
  // values in index order; reports the first failing assignment.
  Satisfaction satisfies(FiniteSemigroup const& s, Pseudoidentity const& p);

}  // namespace semilab
