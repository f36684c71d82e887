#pragma once

// Exception hierarchy shared by all semilab modules.  Every error that can be
// traced to bad input derives from InputError so that front ends can map it
// onto a single "input error" exit status.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semilab {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InputError : public Error {
   public:
    using Error::Error;
  };

  // -- alg-core ---------------------------------------------------------------

  class NonAssociative : public InputError {
   public:
    NonAssociative(std::size_t i, std::size_t j, std::size_t k)
        : InputError("table is not associative: (" + std::to_string(i) + "*"
                     + std::to_string(j) + ")*" + std::to_string(k) + " != "
                     + std::to_string(i) + "*(" + std::to_string(j) + "*"
                     + std::to_string(k) + ")"),
          i(i),
          j(j),
          k(k) {}
    std::size_t i, j, k;
  };

  class IndexOutOfRange : public InputError {
   public:
    IndexOutOfRange(std::size_t row, std::size_t col, std::string const& why)
        : InputError("table entry (" + std::to_string(row) + ", "
                     + std::to_string(col) + "): " + why),
          row(row),
          col(col) {}
    std::size_t row, col;
  };

  class NotIdempotent : public InputError {
   public:
    explicit NotIdempotent(std::size_t e)
        : InputError("element " + std::to_string(e) + " is not idempotent"),
          element(e) {}
    std::size_t element;
  };

  class EmptyGeneratorSet : public InputError {
   public:
    EmptyGeneratorSet() : InputError("empty generating set") {}
  };

  class TooLarge : public InputError {
   public:
    TooLarge(std::size_t order, std::size_t bound)
        : InputError("order " + std::to_string(order)
                     + " exceeds the configured bound "
                     + std::to_string(bound)),
          order(order),
          bound(bound) {}
    std::size_t order, bound;
  };

  // -- terms ------------------------------------------------------------------

  class SyntaxError : public InputError {
   public:
    SyntaxError(std::size_t position, std::string const& what)
        : InputError("syntax error at position " + std::to_string(position)
                     + ": " + what),
          position(position) {}
    std::size_t position;
  };

  class UnboundLetter : public InputError {
   public:
    explicit UnboundLetter(char letter)
        : InputError(std::string("no value assigned to letter '") + letter
                     + "'"),
          letter(letter) {}
    char letter;
  };

  class UnknownVariety : public InputError {
   public:
    explicit UnknownVariety(std::string const& name)
        : InputError("unknown variety '" + name + "'") {}
  };

  class MissingChecker : public InputError {
   public:
    using InputError::InputError;
  };

  // Basis and structural checkers returned different verdicts.  This always
  // indicates a bug, never bad input.
  class PredicateDisagreement : public Error {
   public:
    PredicateDisagreement(std::string const& variety,
                          std::string const& semigroup,
                          bool                basis_verdict)
        : Error("basis and structural checks disagree for " + variety + " on "
                + (semigroup.empty() ? std::string("<unnamed>") : semigroup)
                + " (basis says " + (basis_verdict ? "member" : "non-member")
                + ")"),
          variety(variety) {}
    std::string variety;
  };

  // -- expansion --------------------------------------------------------------

  class UnknownLetter : public InputError {
   public:
    explicit UnknownLetter(char letter)
        : InputError(std::string("letter '") + letter
                     + "' is not in the alphabet"),
          letter(letter) {}
    char letter;
  };

  class NotOnto : public InputError {
   public:
    using InputError::InputError;
  };

  class SignatureExplosion : public Error {
   public:
    explicit SignatureExplosion(std::size_t cap)
        : Error("more than " + std::to_string(cap)
                + " reachable signatures"),
          cap(cap) {}
    std::size_t cap;
  };

  // -- langkit ----------------------------------------------------------------

  class BadTransition : public InputError {
   public:
    using InputError::InputError;
  };

  class BadState : public InputError {
   public:
    using InputError::InputError;
  };

  class ExplosionCap : public Error {
   public:
    explicit ExplosionCap(std::size_t cap)
        : Error("transition semigroup exceeds " + std::to_string(cap)
                + " elements"),
          cap(cap) {}
    std::size_t cap;
  };

  class AlphabetMismatch : public InputError {
   public:
    using InputError::InputError;
  };

  // -- jcalc ------------------------------------------------------------------

  class NotOrganizable : public InputError {
   public:
    using InputError::InputError;
  };

}  // namespace semilab
