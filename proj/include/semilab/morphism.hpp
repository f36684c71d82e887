#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semilab/semigroup.hpp"

namespace semilab {

  enum class MorphismMode { monoid, semigroup };

  std::string to_string(MorphismMode mode);
  MorphismMode parse_mode(std::string const& text);

  // A map from an ordered alphabet into a finite semigroup, read as the
  // homomorphism A+ -> S (semigroup mode) or A* -> M (monoid mode).
  //
  // Letters are ASCII letters and must be distinct.  Surjectivity is not
  // enforced here; see is_onto().
  class LetterMorphism {
   public:
    LetterMorphism(std::vector<char>    alphabet,
                   FiniteSemigroup      target,
                   std::vector<Element> images,
                   MorphismMode         mode = MorphismMode::semigroup);

    std::vector<char> const& alphabet() const noexcept {
      return alphabet_;
    }
    FiniteSemigroup const& target() const noexcept {
      return target_;
    }
    std::vector<Element> const& images() const noexcept {
      return images_;
    }
    MorphismMode mode() const noexcept {
      return mode_;
    }

    std::optional<std::size_t> letter_index(char letter) const noexcept;

    // Throws UnknownLetter.
    Element image(char letter) const;

    // Image of a nonempty word; throws UnknownLetter.
    Element evaluate(std::string const& word) const;

    // Semigroup mode: the images generate the target.  Monoid mode: the
    // target is a monoid and the images together with its identity generate
    // it.
    bool is_onto() const;

   private:
    std::vector<char>    alphabet_;
    FiniteSemigroup      target_;
    std::vector<Element> images_;
    MorphismMode         mode_;
  };

}  // namespace semilab
