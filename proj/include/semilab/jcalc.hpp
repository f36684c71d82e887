#pragma once

// Calculus of omega-terms modulo J: reduced normal forms, organized
// factorizations and their reduction to short breaks, and comparison of two
// terms factor by factor.
//
// Modulo J every power x^(w+k) is idempotent and determined by its content,
// so a term reduces to an alternation of words and blocks (letter sets).

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "semilab/semigroup.hpp"
#include "semilab/term.hpp"

namespace semilab {

  struct JItem {
    enum class Kind { word, block };

    Kind        kind = Kind::word;
    std::string word;   // nonempty when kind == word
    LetterSet   block;  // nonempty when kind == block

    static JItem of_word(std::string w);
    static JItem of_block(LetterSet c);

    bool is_word() const noexcept {
      return kind == Kind::word;
    }
    bool is_block() const noexcept {
      return kind == Kind::block;
    }

    friend bool operator==(JItem const&, JItem const&) = default;
  };

  using JNormalForm = std::vector<JItem>;

  // Letters become one-letter words, powers become blocks of their content.
  std::vector<JItem> j_items(OmegaTerm const& t);

  // Applies merge, coalesce and absorb rules until none fires, always at the
  // leftmost applicable site.
  JNormalForm j_normalize(std::vector<JItem> items);
  // Same rules, each step at a site drawn uniformly from the applicable ones.
  JNormalForm j_normalize(std::vector<JItem> items, std::mt19937_64& rng);

  JNormalForm j_normal_form(OmegaTerm const& t);
  bool        j_equal(OmegaTerm const& u, OmegaTerm const& v);

  // Shortest subword w in shortlex order, |w| <= max_length, over the joint
  // content of u and v, such that the syntactic semigroup of A* w1 A* ... A*
  // under its letter morphism separates u from v.
  std::optional<std::string> piecewise_witness(OmegaTerm const& u,
                                               OmegaTerm const& v,
                                               std::size_t max_length = 6);

  // Words verbatim, blocks as [letters], separated by spaces.
  std::string to_string(JNormalForm const& nf);

  // u0 P1 u1 ... Pn un with each Pi a nonempty run of powers.
  struct OrganizedFactorization {
    std::vector<std::string>            words;   // n + 1 entries
    std::vector<std::vector<OmegaTerm>> blocks;  // n entries

    std::size_t size() const noexcept {
      return blocks.size();
    }
    // The term back; the empty factorization has no term.
    std::optional<OmegaTerm> flatten() const;
  };

  // Throws NotOrganizable.
  OrganizedFactorization organize(OmegaTerm const& t);

  // A block of a reduced factorization: its J-reduced contents and the
  // subterm of the source it stands for, absorbed letters included.
  struct ReducedBlock {
    std::vector<LetterSet> contents;
    OmegaTerm              term;
  };

  struct ReducedFactorization {
    std::vector<std::string>  words;
    std::vector<ReducedBlock> blocks;

    std::size_t size() const noexcept {
      return blocks.size();
    }
    // Words and block contents as one J normal form.
    JNormalForm normal_form() const;
  };

  struct Reduction {
    ReducedFactorization     result;
    std::vector<std::string> log;
  };

  // Breaks are tested with the content criterion, which is only valid for
  // pseudovarieties between J and DS.
  Reduction reduce_to_short_breaks(OrganizedFactorization const& f);

  // Blocks are J-equal iff their reduced contents agree.
  struct JContentOracle {};
  // Blocks are told apart by a failing pseudoidentity in some member; the
  // corpus alone never certifies equality.
  struct CorpusOracle {
    std::vector<FiniteSemigroup> corpus;
  };
  using BlockOracle = std::variant<JContentOracle, CorpusOracle>;

  enum class CutOutcome { equal, distinct, unknown };
  std::string to_string(CutOutcome o);

  struct BlockComparison {
    std::size_t         index;  // 1-based
    ReducedBlock        left;
    ReducedBlock        right;
    std::optional<bool> equal;  // nullopt when the oracle cannot tell
    std::optional<std::string> witness;  // distinguishing semigroup
  };

  struct CutVerdict {
    CutOutcome outcome = CutOutcome::equal;
    // word index for skeleton mismatches, block index otherwise
    std::optional<std::size_t>   position;
    std::string                  reason;
    std::vector<BlockComparison> block_pairs;
  };

  // Throws NotOrganizable.
  CutVerdict cut_compare(OmegaTerm const&   u,
                         OmegaTerm const&   v,
                         BlockOracle const& oracle = JContentOracle{});

}  // namespace semilab
