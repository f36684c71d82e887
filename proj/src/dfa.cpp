#include "semilab/dfa.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "semilab/error.hpp"

namespace semilab {

  Dfa::Dfa(std::vector<char>               alphabet,
           std::size_t                     states,
           State                           initial,
           std::vector<State> const&       accepting,
           std::vector<std::vector<State>> delta)
      : alphabet_(std::move(alphabet)),
        initial_(initial),
        delta_(std::move(delta)) {
    if (alphabet_.empty()) {
      throw BadTransition("the alphabet must not be empty");
    }
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      if (!std::isalpha(static_cast<unsigned char>(alphabet_[i]))) {
        throw BadTransition(std::string("'") + alphabet_[i]
                            + "' is not a letter");
      }
      if (std::count(alphabet_.begin(), alphabet_.end(), alphabet_[i]) != 1) {
        throw BadTransition(std::string("duplicate letter '") + alphabet_[i]
                            + "'");
      }
    }
    if (states == 0) {
      throw BadState("an automaton needs at least one state");
    }
    if (initial_ >= states) {
      throw BadState("initial state " + std::to_string(initial_)
                     + " is not below " + std::to_string(states));
    }
    if (delta_.size() > alphabet_.size()) {
      throw BadTransition("more transition rows than letters");
    }
    delta_.resize(alphabet_.size(), std::vector<State>(states, none));
    bool partial = false;
    for (std::size_t i = 0; i < delta_.size(); ++i) {
      if (delta_[i].size() != states) {
        throw BadTransition(std::string("row for '") + alphabet_[i] + "' has "
                            + std::to_string(delta_[i].size())
                            + " entries, expected " + std::to_string(states));
      }
      for (State q : delta_[i]) {
        if (q == none) {
          partial = true;
        } else if (q >= states) {
          throw BadState("transition to state " + std::to_string(q) + " of "
                         + std::to_string(states));
        }
      }
    }
    accepting_.assign(states + (partial ? 1 : 0), 0);
    for (State q : accepting) {
      if (q >= states) {
        throw BadState("accepting state " + std::to_string(q) + " of "
                       + std::to_string(states));
      }
      accepting_[q] = 1;
    }
    if (partial) {
      auto const sink = static_cast<State>(states);
      for (auto& row : delta_) {
        for (State& q : row) {
          q = q == none ? sink : q;
        }
        row.push_back(sink);
      }
    }
  }

  std::vector<State> Dfa::accepting_states() const {
    std::vector<State> out;
    for (State q = 0; q < states(); ++q) {
      if (is_accepting(q)) {
        out.push_back(q);
      }
    }
    return out;
  }

  std::optional<std::size_t> Dfa::letter_index(char c) const noexcept {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), c);
    if (it == alphabet_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - alphabet_.begin());
  }

  bool Dfa::accepts(std::string_view word) const {
    if (word.empty()) {
      return false;
    }
    State q = initial_;
    for (char c : word) {
      auto i = letter_index(c);
      if (!i) {
        return false;
      }
      q = next(q, *i);
    }
    return is_accepting(q);
  }

  namespace {

    // Rebuilds an automaton from class labels, numbering classes by BFS.
    Dfa quotient_bfs(Dfa const& d, std::vector<std::size_t> const& cls) {
      std::size_t const k = d.alphabet().size();
      std::vector<State> rep;  // representative per new state
      std::map<std::size_t, State> by_class;
      auto const visit = [&](State q) {
        auto [it, fresh]
            = by_class.emplace(cls[q], static_cast<State>(rep.size()));
        if (fresh) {
          rep.push_back(q);
        }
        return it->second;
      };
      visit(d.initial());
      std::vector<std::vector<State>> delta(k);
      for (std::size_t head = 0; head < rep.size(); ++head) {
        for (std::size_t i = 0; i < k; ++i) {
          State const t = visit(d.next(rep[head], i));
          delta[i].push_back(t);
        }
      }
      std::vector<State> accepting;
      for (State s = 0; s < rep.size(); ++s) {
        if (d.is_accepting(rep[s])) {
          accepting.push_back(s);
        }
      }
      return Dfa(d.alphabet(), rep.size(), 0, accepting, std::move(delta));
    }

    void require_same_alphabet(Dfa const& x, Dfa const& y) {
      if (x.alphabet() != y.alphabet()) {
        throw AlphabetMismatch("automata over different alphabets");
      }
    }

    template <typename Op>
    Dfa product(Dfa const& x, Dfa const& y, Op op) {
      require_same_alphabet(x, y);
      std::size_t const k = x.alphabet().size();
      std::map<std::pair<State, State>, State> index;
      std::vector<std::pair<State, State>>     pairs;
      auto const visit = [&](std::pair<State, State> p) {
        auto [it, fresh] = index.emplace(p, static_cast<State>(pairs.size()));
        if (fresh) {
          pairs.push_back(p);
        }
        return it->second;
      };
      visit({x.initial(), y.initial()});
      std::vector<std::vector<State>> delta(k);
      for (std::size_t head = 0; head < pairs.size(); ++head) {
        auto const [p, q] = pairs[head];
        for (std::size_t i = 0; i < k; ++i) {
          delta[i].push_back(visit({x.next(p, i), y.next(q, i)}));
        }
      }
      std::vector<State> accepting;
      for (State s = 0; s < pairs.size(); ++s) {
        if (op(x.is_accepting(pairs[s].first),
               y.is_accepting(pairs[s].second))) {
          accepting.push_back(s);
        }
      }
      return minimize(
          Dfa(x.alphabet(), pairs.size(), 0, accepting, std::move(delta)));
    }

    // Shortest nonempty words from `from` to every state; nullopt when no
    // nonempty word leads there.
    std::vector<std::optional<std::string>> nonempty_paths(Dfa const& d,
                                                           State from) {
      std::vector<std::optional<std::string>> path(d.states());
      std::vector<State>                      queue;
      for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
        State const t = d.next(from, i);
        if (!path[t]) {
          path[t] = std::string(1, d.alphabet()[i]);
          queue.push_back(t);
        }
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        State const q = queue[head];
        for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
          State const t = d.next(q, i);
          if (!path[t]) {
            path[t] = *path[q] + d.alphabet()[i];
            queue.push_back(t);
          }
        }
      }
      return path;
    }

  }  // namespace

  Dfa minimize(Dfa const& d) {
    std::size_t const n = d.states();
    std::size_t const k = d.alphabet().size();
    // Moore refinement on all states; unreachable ones vanish in the BFS
    std::vector<std::size_t> cls(n);
    for (State q = 0; q < n; ++q) {
      cls[q] = d.is_accepting(q) ? 1 : 0;
    }
    std::size_t count = 0;
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> ids;
      std::vector<std::size_t>                        next(n);
      for (State q = 0; q < n; ++q) {
        std::vector<std::size_t> key = {cls[q]};
        for (std::size_t i = 0; i < k; ++i) {
          key.push_back(cls[d.next(q, i)]);
        }
        next[q] = ids.emplace(std::move(key), ids.size()).first->second;
      }
      cls.swap(next);
      if (ids.size() == count) {
        break;
      }
      count = ids.size();
    }
    return quotient_bfs(d, cls);
  }

  Dfa reverse(Dfa const& d) {
    std::size_t const k = d.alphabet().size();
    using Subset        = std::vector<State>;
    std::map<Subset, State> index;
    std::vector<Subset>     subsets;
    auto const visit = [&](Subset s) {
      auto [it, fresh] = index.emplace(s, static_cast<State>(subsets.size()));
      if (fresh) {
        subsets.push_back(std::move(s));
      }
      return it->second;
    };
    visit(d.accepting_states());
    std::vector<std::vector<State>> delta(k);
    for (std::size_t head = 0; head < subsets.size(); ++head) {
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<unsigned char> target(d.states(), 0);
        for (State t : subsets[head]) {
          target[t] = 1;
        }
        Subset pre;
        for (State p = 0; p < d.states(); ++p) {
          if (target[d.next(p, i)]) {
            pre.push_back(p);
          }
        }
        delta[i].push_back(visit(std::move(pre)));
      }
    }
    std::vector<State> accepting;
    for (State s = 0; s < subsets.size(); ++s) {
      if (std::binary_search(subsets[s].begin(), subsets[s].end(),
                             d.initial())) {
        accepting.push_back(s);
      }
    }
    return minimize(
        Dfa(d.alphabet(), subsets.size(), 0, accepting, std::move(delta)));
  }

  Dfa intersect(Dfa const& x, Dfa const& y) {
    return product(x, y, [](bool a, bool b) { return a && b; });
  }

  Dfa unite(Dfa const& x, Dfa const& y) {
    return product(x, y, [](bool a, bool b) { return a || b; });
  }

  Dfa complement(Dfa const& d) {
    std::vector<State> accepting;
    for (State q = 0; q < d.states(); ++q) {
      if (!d.is_accepting(q)) {
        accepting.push_back(q);
      }
    }
    std::vector<std::vector<State>> delta;
    for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
      delta.push_back(d.row(i));
    }
    return minimize(
        Dfa(d.alphabet(), d.states(), d.initial(), accepting, delta));
  }

  bool is_empty(Dfa const& d) {
    auto const path = nonempty_paths(d, d.initial());
    for (State q = 0; q < d.states(); ++q) {
      if (path[q] && d.is_accepting(q)) {
        return false;
      }
    }
    return true;
  }

  bool equivalent(Dfa const& x, Dfa const& y) {
    return is_empty(intersect(x, complement(y)))
           && is_empty(intersect(y, complement(x)));
  }

  Dfa subword_language(std::vector<char> const& alphabet,
                       std::string const&       subword) {
    if (subword.empty()) {
      throw InputError("the subword must be nonempty");
    }
    std::size_t const               k = subword.size();
    std::vector<std::vector<State>> delta;
    for (char c : alphabet) {
      std::vector<State> row(k + 1);
      for (std::size_t i = 0; i <= k; ++i) {
        row[i] = static_cast<State>(i < k && subword[i] == c ? i + 1 : i);
      }
      delta.push_back(std::move(row));
    }
    return Dfa(alphabet, k + 1, 0, {static_cast<State>(k)}, std::move(delta));
  }

  Dfa count_language(std::vector<char> const& alphabet,
                     char                     letter,
                     std::size_t              modulus,
                     std::size_t              residue) {
    if (modulus == 0 || residue >= modulus) {
      throw InputError("need 0 <= residue < modulus");
    }
    // states 0..m-1 count occurrences; state m is the initial state, kept
    // apart so that the empty word is not counted
    std::vector<std::vector<State>> delta;
    for (char c : alphabet) {
      std::vector<State> row(modulus + 1);
      for (std::size_t i = 0; i <= modulus; ++i) {
        std::size_t const count = i == modulus ? 0 : i;
        row[i] = static_cast<State>(c == letter ? (count + 1) % modulus : count);
      }
      delta.push_back(std::move(row));
    }
    return minimize(Dfa(alphabet, modulus + 1, static_cast<State>(modulus),
                        {static_cast<State>(residue)}, std::move(delta)));
  }

  Dfa plus_language(std::vector<char> const& alphabet,
                    std::string const&       letters) {
    std::vector<std::vector<State>> delta;
    for (char c : alphabet) {
      bool const ok = letters.find(c) != std::string::npos;
      delta.push_back({ok ? State{1} : Dfa::none, ok ? State{1} : Dfa::none});
    }
    return minimize(Dfa(alphabet, 2, 0, {1}, std::move(delta)));
  }

  Dfa finite_language(std::vector<char> const&        alphabet,
                      std::vector<std::string> const& words) {
    std::vector<std::vector<State>> delta(alphabet.size(),
                                          std::vector<State>(1, Dfa::none));
    std::vector<State> accepting;
    std::size_t        states = 1;
    for (auto const& w : words) {
      if (w.empty()) {
        throw InputError("the empty word is not a member of a +-language");
      }
      State q = 0;
      for (char c : w) {
        auto const it = std::find(alphabet.begin(), alphabet.end(), c);
        if (it == alphabet.end()) {
          throw UnknownLetter(c);
        }
        auto const i = static_cast<std::size_t>(it - alphabet.begin());
        if (delta[i][q] == Dfa::none) {
          for (auto& row : delta) {
            row.push_back(Dfa::none);
          }
          delta[i][q] = static_cast<State>(states++);
        }
        q = delta[i][q];
      }
      accepting.push_back(q);
    }
    return minimize(Dfa(alphabet, states, 0, accepting, std::move(delta)));
  }

  std::string to_string(CodeSide side) {
    return side == CodeSide::prefix ? "prefix" : "suffix";
  }

  CodeSide parse_side(std::string const& text) {
    if (text == "prefix") {
      return CodeSide::prefix;
    }
    if (text == "suffix") {
      return CodeSide::suffix;
    }
    throw InputError("side must be 'prefix' or 'suffix', got '" + text + "'");
  }

  CodeVerdict is_code(Dfa const& d, CodeSide side) {
    if (side == CodeSide::suffix) {
      auto v = is_code(reverse(d), CodeSide::prefix);
      if (v.witness) {
        auto& [u, w] = *v.witness;
        std::reverse(u.begin(), u.end());
        std::reverse(w.begin(), w.end());
      }
      return v;
    }
    auto const from_start = nonempty_paths(d, d.initial());
    // try accepting states in order of their shortest access word
    std::vector<State> order;
    for (State q = 0; q < d.states(); ++q) {
      if (from_start[q] && d.is_accepting(q)) {
        order.push_back(q);
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](State p, State q) {
      auto const& a = *from_start[p];
      auto const& b = *from_start[q];
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (State q : order) {
      auto const onward = nonempty_paths(d, q);
      std::optional<std::string> best;
      for (State t = 0; t < d.states(); ++t) {
        if (onward[t] && d.is_accepting(t)
            && (!best || onward[t]->size() < best->size()
                || (onward[t]->size() == best->size() && *onward[t] < *best))) {
          best = onward[t];
        }
      }
      if (best) {
        return {false, std::pair{*from_start[q], *from_start[q] + *best}};
      }
    }
    return {true, std::nullopt};
  }

  SyntacticSemigroup syntactic_semigroup(Dfa const& d, std::size_t cap) {
    Dfa const                   m = minimize(d);
    std::vector<Transformation> gens;
    for (std::size_t i = 0; i < m.alphabet().size(); ++i) {
      gens.push_back(m.row(i));
    }
    std::string const labels(m.alphabet().begin(), m.alphabet().end());
    auto ts = transformation_semigroup(gens, labels, cap, "Synt");
    LetterMorphism phi(m.alphabet(), ts.semigroup, ts.generators,
                       MorphismMode::semigroup);
    return {std::move(ts.semigroup), std::move(phi), std::move(ts.elements)};
  }

}  // namespace semilab
