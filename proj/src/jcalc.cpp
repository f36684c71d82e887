#include "semilab/jcalc.hpp"

#include <algorithm>

#include "semilab/corpus.hpp"
#include "semilab/error.hpp"

namespace semilab {

  JItem JItem::of_word(std::string w) {
    return JItem{Kind::word, std::move(w), {}};
  }

  JItem JItem::of_block(LetterSet c) {
    return JItem{Kind::block, {}, c};
  }

  std::vector<JItem> j_items(OmegaTerm const& t) {
    std::vector<JItem> items;
    for (auto const& f : t.factors()) {
      if (f.is_letter()) {
        items.push_back(JItem::of_word(std::string(1, f.symbol())));
      } else if (f.is_power()) {
        items.push_back(JItem::of_block(content(f.base())));
      } else {
        auto inner = j_items(f);
        items.insert(items.end(), inner.begin(), inner.end());
      }
    }
    return items;
  }

  namespace {

    enum class Rule { coalesce, merge, absorb_into_next, absorb_into_prev };

    struct Site {
      std::size_t at;  // rule applies to items at and at + 1
      Rule        rule;
    };

    std::vector<Site> sites(std::vector<JItem> const& items) {
      std::vector<Site> out;
      for (std::size_t i = 0; i + 1 < items.size(); ++i) {
        auto const& x = items[i];
        auto const& y = items[i + 1];
        if (x.is_word() && y.is_word()) {
          out.push_back({i, Rule::coalesce});
        } else if (x.is_block() && y.is_block()) {
          if (x.block.comparable(y.block)) {
            out.push_back({i, Rule::merge});
          }
        } else if (x.is_word()) {
          if (y.block.contains(x.word.back())) {
            out.push_back({i, Rule::absorb_into_next});
          }
        } else if (x.block.contains(y.word.front())) {
          out.push_back({i, Rule::absorb_into_prev});
        }
      }
      return out;
    }

    void apply(std::vector<JItem>& items, Site s) {
      auto& x = items[s.at];
      auto& y = items[s.at + 1];
      switch (s.rule) {
        case Rule::coalesce:
          x.word += y.word;
          items.erase(items.begin() + static_cast<std::ptrdiff_t>(s.at) + 1);
          break;
        case Rule::merge:
          x.block = x.block | y.block;
          items.erase(items.begin() + static_cast<std::ptrdiff_t>(s.at) + 1);
          break;
        case Rule::absorb_into_next:
          x.word.pop_back();
          if (x.word.empty()) {
            items.erase(items.begin() + static_cast<std::ptrdiff_t>(s.at));
          }
          break;
        case Rule::absorb_into_prev:
          y.word.erase(0, 1);
          if (y.word.empty()) {
            items.erase(items.begin() + static_cast<std::ptrdiff_t>(s.at) + 1);
          }
          break;
      }
    }

    template <class Choose>
    JNormalForm normalize(std::vector<JItem> items, Choose choose) {
      std::erase_if(items, [](JItem const& i) {
        return i.is_word() ? i.word.empty() : i.block.empty();
      });
      for (;;) {
        auto const s = sites(items);
        if (s.empty()) {
          return items;
        }
        apply(items, s[choose(s.size())]);
      }
    }

    std::vector<LetterSet> reduced_contents(std::vector<LetterSet> blocks) {
      std::vector<JItem> items;
      for (auto c : blocks) {
        items.push_back(JItem::of_block(c));
      }
      std::vector<LetterSet> out;
      for (auto const& i : j_normalize(std::move(items))) {
        out.push_back(i.block);
      }
      return out;
    }

    std::string pi(std::size_t i) {
      return "π_" + std::to_string(i);
    }

  }  // namespace

  JNormalForm j_normalize(std::vector<JItem> items) {
    return normalize(std::move(items), [](std::size_t) { return 0; });
  }

  JNormalForm j_normalize(std::vector<JItem> items, std::mt19937_64& rng) {
    return normalize(std::move(items), [&](std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    });
  }

  JNormalForm j_normal_form(OmegaTerm const& t) {
    return j_normalize(j_items(t));
  }

  bool j_equal(OmegaTerm const& u, OmegaTerm const& v) {
    return j_normal_form(u) == j_normal_form(v);
  }

  std::optional<std::string> piecewise_witness(OmegaTerm const& u,
                                               OmegaTerm const& v,
                                               std::size_t      max_length) {
    auto const        letters = (content(u) | content(v)).letters();
    std::vector<char> alphabet(letters.begin(), letters.end());
    std::vector<std::string> layer = {""};
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<std::string> next;
      for (auto const& w : layer) {
        for (char c : alphabet) {
          next.push_back(w + c);
        }
      }
      for (auto const& w : next) {
        auto const m = piecewise_member(alphabet, w);
        Assignment a;
        for (char c : alphabet) {
          a.set(c, m.morphism.image(c));
        }
        if (eval_term(u, m.semigroup(), a) != eval_term(v, m.semigroup(), a)) {
          return w;
        }
      }
      layer = std::move(next);
    }
    return std::nullopt;
  }

  std::string to_string(JNormalForm const& nf) {
    std::string out;
    for (auto const& i : nf) {
      if (!out.empty()) {
        out += ' ';
      }
      out += i.is_word() ? i.word : "[" + i.block.letters() + "]";
    }
    return out;
  }

  std::optional<OmegaTerm> OrganizedFactorization::flatten() const {
    std::vector<OmegaTerm> factors;
    auto const add_word = [&](std::string const& w) {
      for (char c : w) {
        factors.push_back(OmegaTerm::letter(c));
      }
    };
    for (std::size_t i = 0; i < words.size(); ++i) {
      add_word(words[i]);
      if (i < blocks.size()) {
        factors.insert(factors.end(), blocks[i].begin(), blocks[i].end());
      }
    }
    if (factors.empty()) {
      return std::nullopt;
    }
    return OmegaTerm::concat(std::move(factors));
  }

  OrganizedFactorization organize(OmegaTerm const& t) {
    OrganizedFactorization f;
    f.words.emplace_back();
    bool in_block = false;
    for (auto const& x : t.factors()) {
      if (x.is_letter()) {
        if (in_block) {
          f.words.emplace_back();
          in_block = false;
        }
        f.words.back() += x.symbol();
      } else if (x.is_power()) {
        if (!in_block) {
          f.blocks.emplace_back();
          in_block = true;
        }
        f.blocks.back().push_back(x);
      } else {
        throw NotOrganizable("factor " + to_string(x)
                             + " is neither a letter nor a power");
      }
    }
    if (in_block) {
      f.words.emplace_back();
    }
    return f;
  }

  JNormalForm ReducedFactorization::normal_form() const {
    std::vector<JItem> items;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (!words[i].empty()) {
        items.push_back(JItem::of_word(words[i]));
      }
      if (i < blocks.size()) {
        for (auto c : blocks[i].contents) {
          items.push_back(JItem::of_block(c));
        }
      }
    }
    return items;
  }

  Reduction reduce_to_short_breaks(OrganizedFactorization const& f) {
    Reduction r;
    auto& words  = r.result.words;
    auto& blocks = r.result.blocks;
    words        = f.words;
    for (auto const& powers : f.blocks) {
      std::vector<LetterSet> contents;
      for (auto const& p : powers) {
        contents.push_back(content(p.base()));
      }
      blocks.push_back({reduced_contents(std::move(contents)),
                        OmegaTerm::concat(powers)});
    }

    // blocks[i] and blocks[i + 1] lose the word between them
    auto const merge = [&](std::size_t i) {
      auto contents = blocks[i].contents;
      auto const& next = blocks[i + 1].contents;
      contents.insert(contents.end(), next.begin(), next.end());
      blocks[i] = {reduced_contents(std::move(contents)),
                   OmegaTerm::concat({blocks[i].term, blocks[i + 1].term})};
      blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      words.erase(words.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      r.log.push_back(pi(i + 1) + " " + pi(i + 2) + " merged into "
                      + pi(i + 1));
    };

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < blocks.size() && !changed; ++i) {
        auto& after = words[i + 1];
        if (!after.empty() && blocks[i].contents.back().contains(after[0])) {
          char const a   = after[0];
          blocks[i].term = OmegaTerm::concat(
              {blocks[i].term, OmegaTerm::letter(a)});
          after.erase(0, 1);
          r.log.push_back(pi(i + 1) + " = " + pi(i + 1) + "(" + a
                          + "·x)^ω");
          if (after.empty() && i + 1 < blocks.size()) {
            merge(i);
          }
          changed = true;
          break;
        }
        auto& before = words[i];
        if (!before.empty()
            && blocks[i].contents.front().contains(before.back())) {
          char const a   = before.back();
          blocks[i].term = OmegaTerm::concat(
              {OmegaTerm::letter(a), blocks[i].term});
          before.pop_back();
          r.log.push_back(pi(i + 1) + " = (x·" + a + ")^ω" + pi(i + 1));
          if (before.empty() && i > 0) {
            merge(i - 1);
          }
          changed = true;
        }
      }
    }
    return r;
  }

  std::string to_string(CutOutcome o) {
    switch (o) {
      case CutOutcome::equal:
        return "Equal";
      case CutOutcome::distinct:
        return "Distinct";
      case CutOutcome::unknown:
        return "Unknown";
    }
    return {};
  }

  CutVerdict cut_compare(OmegaTerm const&   u,
                         OmegaTerm const&   v,
                         BlockOracle const& oracle) {
    auto const x = reduce_to_short_breaks(organize(u)).result;
    auto const y = reduce_to_short_breaks(organize(v)).result;

    CutVerdict        verdict;
    std::size_t const common = std::min(x.words.size(), y.words.size());
    std::size_t       first  = 0;
    while (first < common && x.words[first] == y.words[first]) {
      ++first;
    }
    if (x.size() != y.size()) {
      verdict.outcome  = CutOutcome::distinct;
      verdict.position = first;
      verdict.reason   = "block counts differ: " + std::to_string(x.size())
                       + " vs " + std::to_string(y.size());
      return verdict;
    }
    if (first < common) {
      verdict.outcome  = CutOutcome::distinct;
      verdict.position = first;
      verdict.reason   = "u_" + std::to_string(first) + " differs: \""
                       + x.words[first] + "\" vs \"" + y.words[first] + "\"";
      return verdict;
    }

    for (std::size_t i = 0; i < x.size(); ++i) {
      BlockComparison cmp{i + 1, x.blocks[i], y.blocks[i], std::nullopt,
                          std::nullopt};
      if (std::holds_alternative<JContentOracle>(oracle)) {
        cmp.equal = cmp.left.contents == cmp.right.contents;
      } else {
        Pseudoidentity const p{cmp.left.term, cmp.right.term};
        for (auto const& s : std::get<CorpusOracle>(oracle).corpus) {
          if (!satisfies(s, p)) {
            cmp.equal   = false;
            cmp.witness = s.name();
            break;
          }
        }
      }
      verdict.block_pairs.push_back(std::move(cmp));
    }

    for (auto const& cmp : verdict.block_pairs) {
      if (cmp.equal == false) {
        verdict.outcome  = CutOutcome::distinct;
        verdict.position = cmp.index;
        verdict.reason   = pi(cmp.index) + " differs";
        return verdict;
      }
    }
    for (auto const& cmp : verdict.block_pairs) {
      if (!cmp.equal) {
        verdict.outcome  = CutOutcome::unknown;
        verdict.position = cmp.index;
        verdict.reason   = pi(cmp.index) + " is not separated by the corpus";
        return verdict;
      }
    }
    verdict.reason = "same skeleton and blocks";
    return verdict;
  }

}  // namespace semilab
