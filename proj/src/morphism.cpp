#include "semilab/morphism.hpp"

#include <algorithm>
#include <cctype>

#include "semilab/construct.hpp"
#include "semilab/error.hpp"

namespace semilab {

  std::string to_string(MorphismMode mode) {
    return mode == MorphismMode::monoid ? "monoid" : "semigroup";
  }

  MorphismMode parse_mode(std::string const& text) {
    if (text == "monoid") {
      return MorphismMode::monoid;
    }
    if (text == "semigroup") {
      return MorphismMode::semigroup;
    }
    throw InputError("mode must be 'monoid' or 'semigroup', got '" + text
                     + "'");
  }

  LetterMorphism::LetterMorphism(std::vector<char>    alphabet,
                                 FiniteSemigroup      target,
                                 std::vector<Element> images,
                                 MorphismMode         mode)
      : alphabet_(std::move(alphabet)),
        target_(std::move(target)),
        images_(std::move(images)),
        mode_(mode) {
    if (alphabet_.empty()) {
      throw InputError("the alphabet must not be empty");
    }
    if (images_.size() != alphabet_.size()) {
      throw InputError("expected one image per letter");
    }
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      if (!std::isalpha(static_cast<unsigned char>(alphabet_[i]))) {
        throw InputError(std::string("'") + alphabet_[i]
                         + "' is not a letter");
      }
      if (std::count(alphabet_.begin(), alphabet_.end(), alphabet_[i]) != 1) {
        throw InputError(std::string("duplicate letter '") + alphabet_[i]
                         + "'");
      }
      if (images_[i] >= target_.order()) {
        throw IndexOutOfRange(i, images_[i], "letter image is not an element");
      }
    }
  }

  std::optional<std::size_t>
  LetterMorphism::letter_index(char letter) const noexcept {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), letter);
    if (it == alphabet_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - alphabet_.begin());
  }

  Element LetterMorphism::image(char letter) const {
    auto i = letter_index(letter);
    if (!i) {
      throw UnknownLetter(letter);
    }
    return images_[*i];
  }

  Element LetterMorphism::evaluate(std::string const& word) const {
    if (word.empty()) {
      throw InputError("cannot evaluate the empty word in a semigroup");
    }
    Element x = image(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) {
      x = target_(x, image(word[i]));
    }
    return x;
  }

  bool LetterMorphism::is_onto() const {
    std::vector<Element> gens = images_;
    if (mode_ == MorphismMode::monoid) {
      if (!target_.identity()) {
        return false;
      }
      gens.push_back(*target_.identity());
    }
    return closure_of(target_, gens).size() == target_.order();
  }

}  // namespace semilab
