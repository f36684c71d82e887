#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "semilab/error.hpp"
#include "semilab/isomorphism.hpp"
#include "semilab/language.hpp"

using namespace semilab;

namespace {

  std::vector<char> const ab = {'a', 'b'};
  State const             X  = Dfa::none;

  Dfa ab_plus() {
    return Dfa(ab, 3, 0, {2}, {{1, X, 1}, {X, 2, X}});
  }

  Dfa random_dfa(std::mt19937_64& rng, std::vector<char> const& alphabet,
                 std::size_t max_states) {
    std::size_t const               n = 1 + rng() % max_states;
    std::vector<std::vector<State>> delta(alphabet.size(),
                                          std::vector<State>(n));
    for (auto& row : delta) {
      for (auto& q : row) {
        q = static_cast<State>(rng() % n);
      }
    }
    std::vector<State> accepting;
    for (State q = 0; q < n; ++q) {
      if (rng() % 2) {
        accepting.push_back(q);
      }
    }
    return Dfa(alphabet, n, 0, accepting, std::move(delta));
  }

  // Each state gets a twin; transitions pick either copy at random.
  Dfa inflate(std::mt19937_64& rng, Dfa const& d) {
    std::size_t const               n = d.states();
    std::vector<std::vector<State>> delta(d.alphabet().size(),
                                          std::vector<State>(2 * n));
    for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
      for (State q = 0; q < 2 * n; ++q) {
        State const t = d.next(q % n, i);
        delta[i][q]   = static_cast<State>(t + (rng() % 2) * n);
      }
    }
    std::vector<State> accepting;
    for (State q : d.accepting_states()) {
      accepting.push_back(q);
      accepting.push_back(static_cast<State>(q + n));
    }
    return Dfa(d.alphabet(), 2 * n, static_cast<State>(n), accepting,
               std::move(delta));
  }

  std::vector<std::string> words_up_to(std::vector<char> const& alphabet,
                                       std::size_t              max_len) {
    std::vector<std::string> all = {""};
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i].size() < max_len) {
        for (char c : alphabet) {
          all.push_back(all[i] + c);
        }
      }
    }
    return all;
  }

  bool same_language(Dfa const& x, Dfa const& y, std::size_t len) {
    for (auto const& w : words_up_to(x.alphabet(), len)) {
      if (x.accepts(w) != y.accepts(w)) {
        return false;
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("building automata") {
  auto d = ab_plus();
  CHECK(d.states() == 4);
  CHECK(d.accepts("ab"));
  CHECK(d.accepts("abab"));
  CHECK_FALSE(d.accepts("aba"));
  CHECK_FALSE(d.accepts(""));
  CHECK_FALSE(d.accepts("ac"));

  Dfa single(ab, 2, 0, {1}, {{1, X}});
  CHECK(single.states() == 3);
  CHECK(single.accepts("a"));
  CHECK_FALSE(single.accepts("b"));

  CHECK_THROWS_AS(Dfa(ab, 4, 0, {1}, {{9, 0, 0, 0}}), BadState);
  CHECK_THROWS_AS(Dfa(ab, 2, 5, {1}, {}), BadState);
  CHECK_THROWS_AS(Dfa(ab, 2, 0, {7}, {}), BadState);
  CHECK_THROWS_AS(Dfa(ab, 2, 0, {1}, {{0}}), BadTransition);
  CHECK_THROWS_AS(Dfa({'a', 'a'}, 1, 0, {}, {}), BadTransition);
  CHECK_THROWS_AS(Dfa({'1'}, 1, 0, {}, {}), BadTransition);
}

TEST_CASE("minimize") {
  auto m = minimize(ab_plus());
  CHECK(m.states() == 4);
  CHECK(minimize(m) == m);
  CHECK(same_language(m, ab_plus(), 8));

  // states 1 and 2 are both accepting sinks for every letter
  Dfa twins(ab, 3, 0, {1, 2}, {{1, 1, 2}, {2, 2, 1}});
  CHECK(minimize(twins).states() == 2);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto d = random_dfa(rng, ab, 6);
    auto m1 = minimize(d);
    REQUIRE(minimize(m1) == m1);
    REQUIRE(m1.states() <= d.states());
    REQUIRE(same_language(d, m1, 7));
    REQUIRE(minimize(inflate(rng, d)) == m1);
  }
}

TEST_CASE("reverse and boolean operations") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 60; ++i) {
    auto x = random_dfa(rng, ab, 4);
    auto y = random_dfa(rng, ab, 4);
    auto r = reverse(x);
    auto n = intersect(x, y);
    auto u = unite(x, y);
    auto c = complement(x);
    for (auto const& w : words_up_to(ab, 6)) {
      std::string rw(w.rbegin(), w.rend());
      REQUIRE(r.accepts(rw) == x.accepts(w));
      REQUIRE(n.accepts(w) == (x.accepts(w) && y.accepts(w)));
      REQUIRE(u.accepts(w) == (x.accepts(w) || y.accepts(w)));
      REQUIRE(c.accepts(w) == (!w.empty() && !x.accepts(w)));
    }
    REQUIRE(equivalent(x, minimize(inflate(rng, x))));
  }
  CHECK(is_empty(Dfa(ab, 1, 0, {}, {})));
  CHECK_THROWS_AS(intersect(ab_plus(), Dfa({'a'}, 1, 0, {0}, {{0}})),
                  AlphabetMismatch);
}

TEST_CASE("language builders") {
  auto sub = subword_language(ab, "ab");
  CHECK(sub.accepts("bbaab"));
  CHECK_FALSE(sub.accepts("ba"));
  auto cnt = count_language(ab, 'b', 2, 0);
  CHECK(cnt.accepts("a"));
  CHECK(cnt.accepts("bab"));
  CHECK_FALSE(cnt.accepts("b"));
  CHECK_FALSE(cnt.accepts(""));
  auto bp = plus_language(ab, "b");
  CHECK(bp.accepts("bbb"));
  CHECK_FALSE(bp.accepts("ba"));
  auto fin = finite_language(ab, {"a", "ba"});
  CHECK(fin.accepts("ba"));
  CHECK_FALSE(fin.accepts("b"));
  CHECK_THROWS_AS(finite_language(ab, {""}), InputError);
}

TEST_CASE("syntactic semigroups") {
  auto synt = syntactic_semigroup(ab_plus());
  CHECK(synt.semigroup.order() == 5);
  CHECK(is_isomorphic(synt.semigroup, named::brandt_b2()));

  auto has_a = syntactic_semigroup(subword_language(ab, "a")).semigroup;
  CHECK(has_a.order() == 2);
  CHECK(is_member(has_a, "Sl"));

  auto just_a = syntactic_semigroup(finite_language(ab, {"a"}));
  CHECK(just_a.semigroup.order() == 2);
  Element const a = just_a.morphism.image('a');
  CHECK(just_a.semigroup(a, a) != a);
  CHECK_FALSE(is_member(just_a.semigroup, "Sl"));

  CHECK_THROWS_AS(syntactic_semigroup(ab_plus(), 3), ExplosionCap);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    auto d   = random_dfa(rng, ab, 4);
    auto s1  = syntactic_semigroup(d).semigroup;
    auto s2  = syntactic_semigroup(inflate(rng, d)).semigroup;
    if (s1.order() <= 12) {
      REQUIRE(is_isomorphic(s1, s2));
    } else {
      REQUIRE(s1 == s2);
    }
  }
}

TEST_CASE("codes") {
  CHECK(is_code(finite_language(ab, {"a", "ba"}), CodeSide::prefix));
  auto v = is_code(finite_language(ab, {"a", "ab"}), CodeSide::prefix);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->first == "a");
  CHECK(v.witness->second == "ab");
  // a*b
  CHECK(is_code(Dfa(ab, 2, 0, {1}, {{0, X}, {1, X}}), CodeSide::prefix));
  auto s = is_code(finite_language(ab, {"b", "ab"}), CodeSide::suffix);
  CHECK_FALSE(s.holds);
  REQUIRE(s.witness);
  CHECK(s.witness->first == "b");
  CHECK(s.witness->second == "ab");

  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    auto d = random_dfa(rng, ab, 5);
    auto p = is_code(d, CodeSide::prefix);
    REQUIRE(p.holds == is_code(reverse(d), CodeSide::suffix).holds);
    if (!p.holds) {
      auto const& [u, w] = *p.witness;
      REQUIRE(d.accepts(u));
      REQUIRE(d.accepts(w));
      REQUIRE(w.size() > u.size());
      REQUIRE(w.compare(0, u.size(), u) == 0);
    } else {
      auto const words = words_up_to(ab, 5);
      for (auto const& u : words) {
        if (!d.accepts(u)) {
          continue;
        }
        for (auto const& x : words) {
          REQUIRE_FALSE((!x.empty() && d.accepts(u + x)));
        }
      }
    }
  }
}

TEST_CASE("marked products") {
  auto one = marked_product(One{}, 'a', One{});
  CHECK(one.accepts("a"));
  CHECK_FALSE(one.accepts("aa"));
  CHECK(one.alphabet() == std::vector<char>{'a'});

  auto bp  = plus_language(ab, "b");
  auto bab = marked_product(bp, 'a', bp);
  for (auto const& w : words_up_to(ab, 7)) {
    auto const i = w.find('a');
    bool const expected = i != std::string::npos && i > 0
                          && i + 1 < w.size()
                          && w.find('a', i + 1) == std::string::npos;
    REQUIRE(bab.accepts(w) == expected);
  }
  CHECK(is_empty(marked_product(bp, 'a', Dfa(ab, 1, 0, {}, {}))));
  CHECK_THROWS_AS(marked_product(bp, 'c', bp), AlphabetMismatch);
  CHECK_THROWS_AS(marked_product(bp, 'a', Dfa({'a'}, 1, 0, {0}, {{0}})),
                  AlphabetMismatch);

  std::mt19937_64 rng(5);
  auto const      words = words_up_to(ab, 8);
  for (int i = 0; i < 30; ++i) {
    LanguageOperand l = random_dfa(rng, ab, 3);
    LanguageOperand k = random_dfa(rng, ab, 3);
    if (i % 5 == 0) {
      l = One{};
    }
    if (i % 7 == 0) {
      k = One{};
    }
    auto const in = [](LanguageOperand const& op, std::string const& w) {
      if (std::holds_alternative<One>(op)) {
        return w.empty();
      }
      return std::get<Dfa>(op).accepts(w);
    };
    auto const p = marked_product(l, 'a', k, ab);
    for (auto const& w : words) {
      bool expected = false;
      for (std::size_t j = 0; j < w.size() && !expected; ++j) {
        expected = w[j] == 'a' && in(l, w.substr(0, j))
                   && in(k, w.substr(j + 1));
      }
      REQUIRE(p.accepts(w) == expected);
    }
  }
}

TEST_CASE("closure probes") {
  auto sl = closure_probe(variety("Sl"), One{}, 'a', One{});
  CHECK(sl.bidet);
  CHECK(sl.l_status == OperandStatus::singleton_empty_word);
  CHECK_FALSE(sl.product_in_variety);
  CHECK(sl.verdict == ProbeVerdict::closure_violated);

  auto bp = plus_language(ab, "b");
  auto j  = closure_probe(variety("J"), bp, 'a', bp);
  CHECK(j.bidet);
  CHECK(j.l_status == OperandStatus::in_variety);
  CHECK(j.verdict == ProbeVerdict::closure_holds);

  auto n = closure_probe(variety("N"), plus_language(ab, "ab"), 'a', One{});
  CHECK_FALSE(n.bidet);
  CHECK(n.failing_side == std::string("prefix"));
  REQUIRE(n.witness);
  CHECK(n.witness->first == "aa");
  CHECK(n.witness->second == "aaa");
  CHECK(n.verdict == ProbeVerdict::not_applicable);

  // a A+ is not a suffix code
  auto s = closure_probe(variety("J"), One{}, 'a', plus_language(ab, "ab"));
  CHECK_FALSE(s.bidet);
  CHECK(s.failing_side == std::string("suffix"));

  CHECK(to_string(ProbeVerdict::closure_holds) == "closure-holds");
  CHECK(to_string(OperandStatus::outside) == "outside");
}
