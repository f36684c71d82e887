#pragma once

// Complete deterministic automata over a small ordered alphabet.
//
// Languages are read as subsets of A+: the empty word is never a member,
// whatever the initial state says.  {1} is only available as an explicit
// operand of marked products (see language.hpp).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semilab/morphism.hpp"
#include "semilab/semigroup.hpp"
#include "semilab/transformation.hpp"

namespace semilab {

  using State = std::uint32_t;

  class Dfa {
   public:
    static constexpr State none = static_cast<State>(-1);

    // delta[i][q] is the target of state q under alphabet[i]; `none`
    // entries, and missing rows, are sent to a fresh non-accepting sink.
    // Throws BadState and BadTransition.
    Dfa(std::vector<char>               alphabet,
        std::size_t                     states,
        State                           initial,
        std::vector<State> const&       accepting,
        std::vector<std::vector<State>> delta);

    std::vector<char> const& alphabet() const noexcept {
      return alphabet_;
    }
    std::size_t states() const noexcept {
      return accepting_.size();
    }
    State initial() const noexcept {
      return initial_;
    }
    bool is_accepting(State q) const noexcept {
      return accepting_[q] != 0;
    }
    std::vector<State> accepting_states() const;
    State              next(State q, std::size_t letter) const noexcept {
      return delta_[letter][q];
    }
    std::optional<std::size_t> letter_index(char c) const noexcept;
    std::vector<State> const&  row(std::size_t letter) const noexcept {
      return delta_[letter];
    }

    // Membership in the +-language; false for the empty word and for words
    // with letters outside the alphabet.
    bool accepts(std::string_view word) const;

    friend bool operator==(Dfa const&, Dfa const&) = default;

   private:
    std::vector<char>               alphabet_;
    State                           initial_;
    std::vector<unsigned char>      accepting_;
    std::vector<std::vector<State>> delta_;
  };

  // Minimal complete DFA of the same A*-language; states are numbered in
  // breadth-first order from the initial state, letters in alphabet order.
  Dfa minimize(Dfa const& d);

  // Minimal DFA of the mirror language.
  Dfa reverse(Dfa const& d);

  // Boolean operations on A+-languages over the same alphabet; throw
  // AlphabetMismatch.  Results are minimal.
  Dfa intersect(Dfa const& x, Dfa const& y);
  Dfa unite(Dfa const& x, Dfa const& y);
  Dfa complement(Dfa const& d);  // A+ minus L

  bool is_empty(Dfa const& d);  // no nonempty word accepted
  bool equivalent(Dfa const& x, Dfa const& y);

  // A* w1 A* ... wk A* (k >= 1), as a +-language.
  Dfa subword_language(std::vector<char> const& alphabet,
                       std::string const&       subword);
  // Words in which `letter` occurs residue mod modulus times (nonempty only).
  Dfa count_language(std::vector<char> const& alphabet,
                     char                     letter,
                     std::size_t              modulus,
                     std::size_t              residue);
  // Nonempty words over `letters`, a subset of the alphabet.
  Dfa plus_language(std::vector<char> const& alphabet,
                    std::string const&       letters);
  // The finite language {words}, words nonempty.
  Dfa finite_language(std::vector<char> const&        alphabet,
                      std::vector<std::string> const& words);

  enum class CodeSide { prefix, suffix };

  std::string to_string(CodeSide side);
  CodeSide    parse_side(std::string const& text);  // throws InputError

  struct CodeVerdict {
    bool holds = true;
    // (u, w) in L x L with u a proper prefix (suffix) of w
    std::optional<std::pair<std::string, std::string>> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Prefix: no u in L has a proper extension u v (v nonempty) in L.  The
  // witness uses shortest words.  Suffix: the prefix test on reverse(d).
  CodeVerdict is_code(Dfa const& d, CodeSide side);

  struct SyntacticSemigroup {
    FiniteSemigroup semigroup;
    LetterMorphism  morphism;
    // one transformation of the minimal DFA per element
    std::vector<Transformation> transformations;
  };

  // Transition semigroup of minimize(d) with its letter morphism; throws
  // ExplosionCap.
  SyntacticSemigroup
  syntactic_semigroup(Dfa const& d, std::size_t cap = default_transformation_cap);

}  // namespace semilab
