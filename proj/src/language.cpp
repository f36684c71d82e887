#include "semilab/language.hpp"

#include <algorithm>
#include <map>

#include "semilab/error.hpp"

namespace semilab {

  std::vector<char>
  operand_alphabet(LanguageOperand const&                  l,
                   char                                    a,
                   LanguageOperand const&                  k,
                   std::optional<std::vector<char>> const& fallback) {
    std::optional<std::vector<char>> alphabet = fallback;
    for (auto const* op : {&l, &k}) {
      if (auto const* d = std::get_if<Dfa>(op)) {
        if (alphabet && *alphabet != d->alphabet()) {
          throw AlphabetMismatch("operands are over different alphabets");
        }
        alphabet = d->alphabet();
      }
    }
    if (!alphabet) {
      alphabet = std::vector<char>{a};
    }
    if (std::find(alphabet->begin(), alphabet->end(), a) == alphabet->end()) {
      throw AlphabetMismatch(std::string("marker '") + a
                             + "' is not in the alphabet");
    }
    return *alphabet;
  }

  namespace {

    // Nondeterministic automaton for L a K.  State 0 is the start; the empty
    // word is never accepted by a Dfa operand, so both operands get a fresh
    // entry state.
    struct Nfa {
      std::vector<std::vector<std::vector<State>>> next;  // [state][letter]
      std::vector<unsigned char>                   final;

      State add(std::size_t letters) {
        next.emplace_back(letters);
        final.push_back(0);
        return static_cast<State>(next.size() - 1);
      }
    };

    Nfa build_nfa(LanguageOperand const& l, std::size_t a,
                  LanguageOperand const& k, std::size_t letters) {
      Nfa         nfa;
      State const start = nfa.add(letters);

      // K side first so that the marker can jump into it
      State k_entry = nfa.add(letters);
      if (auto const* kd = std::get_if<Dfa>(&k)) {
        State const base = static_cast<State>(nfa.next.size());
        for (State q = 0; q < kd->states(); ++q) {
          nfa.add(letters);
          nfa.final[base + q] = kd->is_accepting(q) ? 1 : 0;
        }
        for (State q = 0; q < kd->states(); ++q) {
          for (std::size_t i = 0; i < letters; ++i) {
            nfa.next[base + q][i].push_back(base + kd->next(q, i));
          }
        }
        for (std::size_t i = 0; i < letters; ++i) {
          nfa.next[k_entry][i].push_back(base + kd->next(kd->initial(), i));
        }
      } else {
        nfa.final[k_entry] = 1;
      }

      if (auto const* ld = std::get_if<Dfa>(&l)) {
        State const base = static_cast<State>(nfa.next.size());
        for (State q = 0; q < ld->states(); ++q) {
          nfa.add(letters);
        }
        for (State q = 0; q < ld->states(); ++q) {
          for (std::size_t i = 0; i < letters; ++i) {
            nfa.next[base + q][i].push_back(base + ld->next(q, i));
          }
          if (ld->is_accepting(q)) {
            nfa.next[base + q][a].push_back(k_entry);
          }
        }
        for (std::size_t i = 0; i < letters; ++i) {
          nfa.next[start][i].push_back(base + ld->next(ld->initial(), i));
        }
      } else {
        nfa.next[start][a].push_back(k_entry);
      }
      return nfa;
    }

    bool member(FiniteSemigroup const& s, VarietyPredicate const& v) {
      return variety_member(s, v,
                            v.structural ? Method::structural : Method::basis)
          .member;
    }

  }  // namespace

  Dfa marked_product(LanguageOperand const&                  l,
                     char                                    a,
                     LanguageOperand const&                  k,
                     std::optional<std::vector<char>> const& alphabet) {
    auto const        sigma   = operand_alphabet(l, a, k, alphabet);
    std::size_t const letters = sigma.size();
    std::size_t const marker  = static_cast<std::size_t>(
        std::find(sigma.begin(), sigma.end(), a) - sigma.begin());
    Nfa const nfa = build_nfa(l, marker, k, letters);

    using Subset = std::vector<State>;
    std::map<Subset, State> index;
    std::vector<Subset>     subsets;
    auto const visit = [&](Subset s) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      auto [it, fresh] = index.emplace(s, static_cast<State>(subsets.size()));
      if (fresh) {
        subsets.push_back(std::move(s));
      }
      return it->second;
    };
    visit({0});
    std::vector<std::vector<State>> delta(letters);
    for (std::size_t head = 0; head < subsets.size(); ++head) {
      for (std::size_t i = 0; i < letters; ++i) {
        Subset next;
        for (State q : subsets[head]) {
          auto const& t = nfa.next[q][i];
          next.insert(next.end(), t.begin(), t.end());
        }
        delta[i].push_back(visit(std::move(next)));
      }
    }
    std::vector<State> accepting;
    for (State s = 0; s < subsets.size(); ++s) {
      if (std::any_of(subsets[s].begin(), subsets[s].end(),
                      [&](State q) { return nfa.final[q] != 0; })) {
        accepting.push_back(s);
      }
    }
    return minimize(Dfa(sigma, subsets.size(), 0, accepting, std::move(delta)));
  }

  std::string to_string(OperandStatus s) {
    switch (s) {
      case OperandStatus::in_variety:
        return "in-variety";
      case OperandStatus::singleton_empty_word:
        return "singleton-empty-word";
      case OperandStatus::outside:
        return "outside";
    }
    return {};
  }

  std::string to_string(ProbeVerdict v) {
    switch (v) {
      case ProbeVerdict::closure_holds:
        return "closure-holds";
      case ProbeVerdict::closure_violated:
        return "closure-violated";
      case ProbeVerdict::not_applicable:
        return "not-applicable";
    }
    return {};
  }

  ProbeReport closure_probe(VarietyPredicate const&                 v,
                            LanguageOperand const&                  l,
                            char                                    a,
                            LanguageOperand const&                  k,
                            std::optional<std::vector<char>> const& alphabet) {
    auto const sigma  = operand_alphabet(l, a, k, alphabet);
    auto const status = [&](LanguageOperand const& op) {
      if (auto const* d = std::get_if<Dfa>(&op)) {
        return member(syntactic_semigroup(*d).semigroup, v)
                   ? OperandStatus::in_variety
                   : OperandStatus::outside;
      }
      return OperandStatus::singleton_empty_word;
    };

    auto const prefix = is_code(marked_product(l, a, One{}, sigma),
                                CodeSide::prefix);
    auto const suffix = is_code(marked_product(One{}, a, k, sigma),
                                CodeSide::suffix);
    Dfa  product = marked_product(l, a, k, sigma);
    auto synt    = syntactic_semigroup(product).semigroup;
    bool in      = member(synt, v);

    ProbeReport report{status(l),
                       status(k),
                       prefix.holds && suffix.holds,
                       std::nullopt,
                       std::nullopt,
                       std::move(product),
                       std::move(synt),
                       in,
                       ProbeVerdict::not_applicable};
    if (!prefix.holds) {
      report.failing_side = "prefix";
      report.witness      = prefix.witness;
    } else if (!suffix.holds) {
      report.failing_side = "suffix";
      report.witness      = suffix.witness;
    }
    bool const applicable = report.l_status != OperandStatus::outside
                            && report.k_status != OperandStatus::outside
                            && report.bidet;
    if (applicable) {
      report.verdict = in ? ProbeVerdict::closure_holds
                          : ProbeVerdict::closure_violated;
    }
    return report;
  }

}  // namespace semilab
