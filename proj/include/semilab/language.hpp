#pragma once

// Marked products L a K and probes of closure under bideterministic product.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semilab/dfa.hpp"
#include "semilab/variety.hpp"

namespace semilab {

  // The language {1}, allowed only as a marked-product operand.
  struct One {
    friend bool operator==(One, One) = default;
  };

  using LanguageOperand = std::variant<One, Dfa>;

  // Common alphabet of the operands: that of any Dfa operand, otherwise
  // `fallback`, otherwise {a}.  Throws AlphabetMismatch when the operands
  // disagree or the marker is missing.
  std::vector<char>
  operand_alphabet(LanguageOperand const&                  l,
                   char                                    a,
                   LanguageOperand const&                  k,
                   std::optional<std::vector<char>> const& fallback = {});

  // Minimal DFA of L a K with L, K read as +-languages (or {1}).
  Dfa marked_product(LanguageOperand const&                  l,
                     char                                    a,
                     LanguageOperand const&                  k,
                     std::optional<std::vector<char>> const& alphabet = {});

  enum class OperandStatus { in_variety, singleton_empty_word, outside };
  enum class ProbeVerdict { closure_holds, closure_violated, not_applicable };

  std::string to_string(OperandStatus s);
  std::string to_string(ProbeVerdict v);

  struct ProbeReport {
    OperandStatus l_status;
    OperandStatus k_status;
    bool          bidet;
    // "prefix" when L a is not a prefix code, "suffix" when a K is not a
    // suffix code, with the offending pair
    std::optional<std::string>                         failing_side;
    std::optional<std::pair<std::string, std::string>> witness;
    Dfa                                                product;
    FiniteSemigroup                                    product_syntactic;
    bool                                               product_in_variety;
    ProbeVerdict                                       verdict;
  };

  ProbeReport closure_probe(VarietyPredicate const&                 v,
                            LanguageOperand const&                  l,
                            char                                    a,
                            LanguageOperand const&                  k,
                            std::optional<std::vector<char>> const& alphabet
                            = {});

}  // namespace semilab
