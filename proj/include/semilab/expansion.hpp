#pragma once

// Good factorizations and the Pin-Therien expansion.
//
// All elements below live in the ambient monoid of a letter morphism phi: S^I
// (S with a fresh identity at index |S|) in semigroup mode, the target M
// itself in monoid mode.  A word's signature is its image together with the
// set of classes (phi(x0), a, phi(x1)) of its good factorizations x0 a x1;
// two words are identified by the expansion iff their signatures agree.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semilab/construct.hpp"
#include "semilab/green.hpp"
#include "semilab/morphism.hpp"

namespace semilab {

  struct GoodFactClass {
    Element left;
    char    letter;
    Element right;

    friend auto operator<=>(GoodFactClass const&,
                            GoodFactClass const&) = default;
  };

  // `classes` is sorted and free of duplicates.
  struct Signature {
    Element                    image;
    std::vector<GoodFactClass> classes;

    friend auto operator<=>(Signature const&, Signature const&) = default;
  };

  inline constexpr std::size_t default_signature_cap = 20000;

  // The ambient monoid of phi with its Green structure, shared by the
  // signature computations.
  class SignatureAlgebra {
   public:
    explicit SignatureAlgebra(LetterMorphism phi);

    LetterMorphism const& morphism() const noexcept {
      return phi_;
    }
    FiniteSemigroup const& ambient() const noexcept {
      return ambient_;
    }
    Element ambient_identity() const noexcept {
      return identity_;
    }
    // phi(letter) as an ambient element; throws UnknownLetter.
    Element letter_image(char letter) const;

    // phi^I(word); the empty word maps to the ambient identity.
    Element evaluate(std::string const& word) const;

    std::vector<GoodFactClass>
    good_factorizations(std::string const& word) const;
    Signature                  signature(std::string const& word) const;
    Signature product(Signature const& x, Signature const& y) const;
    Signature identity_signature() const {
      return {identity_, {}};
    }

    // Renders a signature with element names, e.g. "(0; (I,a,s) (s,b,I))".
    std::string describe(Signature const& s) const;

   private:
    bool strict_r_step(Element left, char letter) const;
    bool strict_l_step(char letter, Element right) const;

    LetterMorphism       phi_;
    FiniteSemigroup      ambient_;
    Element              identity_;
    GreenSummary         green_;
  };

  // Convenience wrappers building a SignatureAlgebra per call.
  std::vector<GoodFactClass> good_factorizations(std::string const&    word,
                                                 LetterMorphism const& phi);
  Signature                  signature(std::string const& word,
                                       LetterMorphism const& phi);
  Signature signature_product(Signature const&      x,
                              Signature const&      y,
                              LetterMorphism const& phi);

  struct ExpansionResult {
    FiniteSemigroup        target;
    FiniteSemigroup        expanded;
    LetterMorphism         phi_bd;
    std::vector<Element>   projection;  // expanded element -> target element
    std::vector<Signature> signatures;  // expanded element -> its signature
  };

  // M_phi in monoid mode, S_phi in semigroup mode.  Elements are numbered in
  // breadth-first order from the letters (the identity first in monoid mode)
  // and named by their shortlex-least word.  Throws NotOnto and
  // SignatureExplosion.
  ExpansionResult expand(LetterMorphism const& phi,
                         std::size_t           cap = default_signature_cap);

  struct RegularCoreReport {
    bool passed = false;
    // sorted elements of <Reg(expanded)> and <Reg(target)>
    std::vector<Element> expanded_core;
    std::vector<Element> target_core;
    // two core elements with the same projection, when not injective
    std::optional<std::pair<Element, Element>> collision;
    // a target core element not hit, or a hit element outside the target core
    std::optional<Element> missed;
    std::optional<Element> stray;
  };

  // Checks that the projection restricts to a bijection
  // <Reg(expanded)> -> <Reg(target)>.
  RegularCoreReport regular_core_check(ExpansionResult const& r);

  struct ExpansionTower {
    LetterMorphism               base;
    std::vector<ExpansionResult> levels;  // levels[i] is level i + 1
    // least n >= 1 such that level n projects bijectively onto level n - 1
    std::optional<std::size_t> stabilized_at;

    bool stabilized() const noexcept {
      return stabilized_at.has_value();
    }
    // Level 0 is the target of `base`.
    FiniteSemigroup const& level(std::size_t n) const;
    std::vector<std::size_t> orders() const;
  };

  // Iterates phi -> phi_bd max_iter times.
  ExpansionTower expansion_tower(LetterMorphism const& phi,
                                 std::size_t           max_iter,
                                 std::size_t cap = default_signature_cap);

}  // namespace semilab
