#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semilab/corpus.hpp"
#include "semilab/error.hpp"
#include "semilab/isomorphism.hpp"
#include "semilab/term.hpp"
#include "semilab/variety.hpp"

using namespace semilab;

namespace {

  std::vector<FiniteSemigroup> corpus_up_to_6() {
    auto all = exhaustive_corpus(3);
    all.push_back(named::brandt_b2());
    all.push_back(named::cyclic_group(4));
    all.push_back(named::cyclic_group(5));
    all.push_back(named::klein_four());
    all.push_back(named::symmetric_group_s3());
    all.push_back(named::null_semigroup(4));
    all.push_back(named::monogenic(2, 2));
    all.push_back(named::monogenic(3, 3));
    all.push_back(named::monogenic(5, 1));
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      auto t = random_transformation_semigroup(3, 1 + seed % 3, seed);
      if (t.order() <= 6) {
        all.push_back(t);
      }
    }
    return all;
  }

  OmegaTerm random_term(std::mt19937_64& rng, std::string const& vars,
                        int depth) {
    int const pick = static_cast<int>(rng() % (depth > 0 ? 3 : 1));
    if (pick == 0) {
      return OmegaTerm::letter(vars[rng() % vars.size()]);
    }
    if (pick == 1) {
      return OmegaTerm::power(random_term(rng, vars, depth - 1),
                              static_cast<long long>(rng() % 5) - 2);
    }
    return OmegaTerm::concat({random_term(rng, vars, depth - 1),
                              random_term(rng, vars, depth - 1)});
  }

}  // namespace

TEST_CASE("parse_term") {
  auto t = parse_term("(xy)^w");
  REQUIRE(t.is_power());
  CHECK(t.shift() == 0);
  CHECK(t.base() == OmegaTerm::concat({OmegaTerm::letter('x'),
                                        OmegaTerm::letter('y')}));

  auto u = parse_term("x^(w+1)");
  REQUIRE(u.is_power());
  CHECK(u.shift() == 1);
  CHECK(u.base() == OmegaTerm::letter('x'));

  auto ds = parse_term("((xy)^w(yx)^w(xy)^w)^w");
  REQUIRE(ds.is_power());
  CHECK(ds.base().is_concat());
  CHECK(ds.base().children().size() == 3);

  CHECK(parse_term("x^(w-3)").shift() == -3);
  CHECK(parse_term(" a ( b c ) ^ w ") == parse_term("a(bc)^w"));
  // parentheses without exponent flatten
  CHECK(parse_term("a(bc)") == parse_term("abc"));
  CHECK(parse_term("abc").children().size() == 3);

  CHECK_THROWS_AS(parse_term(""), SyntaxError);
  CHECK_THROWS_AS(parse_term("(xy"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x^"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x^(w*1)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x^(w+)"), SyntaxError);
  try {
    parse_term("ab)");
    FAIL("expected a syntax error");
  } catch (SyntaxError const& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("printing round-trips") {
  for (char const* text : {"(xy)^w", "x^(w+1)", "((xy)^w(yx)^w(xy)^w)^w",
                           "a(bc)^w b(cb)^w", "x^(w-2)y", "(x^w)^w"}) {
    auto t = parse_term(text);
    CHECK(parse_term(to_string(t)) == t);
  }
  CHECK(to_string(parse_term("a (bc)^w")) == "a(bc)^w");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    auto t = random_term(rng, "xyz", 4);
    REQUIRE(parse_term(to_string(t)) == t);
  }
}

TEST_CASE("content") {
  CHECK(content(parse_term("(ab)^w")).letters() == "ab");
  CHECK(content(parse_term("a(bc)^w")).letters() == "abc");
  CHECK(content(parse_term("x^(w-1)")).letters() == "x");
  CHECK(LetterSet::of("ba").comparable(LetterSet::of("a")));
  CHECK_FALSE(LetterSet::of("b").comparable(LetterSet::of("a")));
  CHECK(LetterSet::of("aZ").letters() == "aZ");
}

TEST_CASE("eval_term") {
  auto       b2 = named::brandt_b2();
  Assignment a;
  a.set('x', 0);
  a.set('y', 1);
  CHECK(eval_term(parse_term("(xy)^w"), b2, a) == 2);
  CHECK(eval_term(parse_term("(yx)^w"), b2, a) == 3);
  CHECK(eval_term(parse_term("x"), b2, a) == 0);

  auto       z3 = named::cyclic_group(3);
  Assignment g;
  g.set('x', 1);
  CHECK(eval_term(parse_term("x^(w+1)"), z3, g) == 1);
  CHECK(eval_term(parse_term("x^(w-1)"), z3, g) == 2);
  CHECK_THROWS_AS(eval_term(parse_term("xy"), z3, g), UnboundLetter);
}

TEST_CASE("evaluation is a homomorphism") {
  std::mt19937_64 rng(11);
  auto            corpus = corpus_up_to_6();
  for (int i = 0; i < 2000; ++i) {
    auto const& s = corpus[rng() % corpus.size()];
    auto        u = random_term(rng, "xyz", 3);
    auto        v = random_term(rng, "xyz", 3);
    Assignment  a;
    for (char c : std::string("xyz")) {
      a.set(c, static_cast<Element>(rng() % s.order()));
    }
    REQUIRE(eval_term(OmegaTerm::concat({u, v}), s, a)
            == s(eval_term(u, s, a), eval_term(v, s, a)));
  }
}

TEST_CASE("satisfies") {
  auto b2  = named::brandt_b2();
  auto sat = satisfies(b2, parse_pseudoidentity("(xy)^w = (yx)^w"));
  CHECK_FALSE(sat.holds);
  REQUIRE(sat.counterexample.has_value());
  Element const x = (*sat.counterexample)['x'];
  Element const y = (*sat.counterexample)['y'];
  CHECK(b2.omega(b2(x, y)) != b2.omega(b2(y, x)));
  // first failing assignment in odometer order is x=a, y=b
  CHECK(x == 0);
  CHECK(y == 1);

  CHECK(satisfies(named::cyclic_group(3),
                  parse_pseudoidentity("x^(w+1) = x")));
  CHECK(satisfies(named::semilattice2(), parse_pseudoidentity("xy = yx")));
  CHECK_FALSE(satisfies(named::null_semigroup(2),
                        parse_pseudoidentity("xx = x")));
  CHECK_THROWS_AS(parse_pseudoidentity("xy"), SyntaxError);
  CHECK_THROWS_AS(parse_pseudoidentity("xy = "), SyntaxError);
  CHECK_THROWS_AS(parse_pseudoidentity("x = y = z"), SyntaxError);
}

TEST_CASE("satisfies is invariant under isomorphism") {
  std::vector<Pseudoidentity> ids;
  for (char const* t : {"(xy)^w = (yx)^w", "x^w y x^w = x^w", "xy = yx",
                        "x^(w+1) y = y x^(w-1)", "((xy)^w(yx)^w(xy)^w)^w = (xy)^w"}) {
    ids.push_back(parse_pseudoidentity(t));
  }
  for (auto const& s : corpus_up_to_6()) {
    std::vector<Element> perm(s.order());
    for (Element i = 0; i < s.order(); ++i) {
      perm[i] = static_cast<Element>((i + 1) % s.order());
    }
    auto p = permuted(s, perm);
    for (auto const& id : ids) {
      REQUIRE(satisfies(s, id).holds == satisfies(p, id).holds);
    }
  }
}

TEST_CASE("variety_member examples") {
  auto b2 = named::brandt_b2();
  auto ds = variety_member(b2, variety("DS"), Method::both);
  CHECK_FALSE(ds.member);
  CHECK(variety_member(b2, variety("ECom"), Method::both).member);
  CHECK(variety_member(named::null_semigroup(3), variety("N"), Method::both)
            .member);
  CHECK_FALSE(variety_member(b2, variety("DS"), Method::structural).member);
  auto rs = variety_member(b2, variety("RS"), Method::structural);
  CHECK(rs.member);
  CHECK_THROWS_AS(variety_member(b2, variety("RS"), Method::basis),
                  MissingChecker);
  CHECK_THROWS_AS(variety("Foo"), UnknownVariety);
  CHECK_THROWS_AS(variety("DV(Foo)"), UnknownVariety);

  CHECK(is_member(named::cyclic_group(3), "G"));
  CHECK(is_member(named::symmetric_group_s3(), "G"));
  CHECK_FALSE(is_member(named::symmetric_group_s3(), "Ab"));
  CHECK(is_member(named::klein_four(), "Ab"));
  CHECK_FALSE(is_member(b2, "G"));

  // B2: regular J-classes are not subsemigroups, so not in DV for any V
  CHECK_FALSE(is_member(b2, "DV(G)"));
  CHECK(is_member(named::monogenic(2, 3), "DV(G)"));
  // local monoids of B2 are {e, 0}: semilattices
  CHECK(is_member(b2, "LV(Sl)"));
  CHECK_FALSE(is_member(b2, "LV(G)"));
  CHECK(is_member(named::semilattice2(), "LV(Sl)"));
}

TEST_CASE("basis and structural checks agree on the corpus") {
  auto const corpus = corpus_up_to_6();
  for (auto const& name :
       {"Sl", "J", "DS", "N", "K", "D", "LI", "ECom", "DSRS", "DG"}) {
    auto const v = variety(name);
    for (auto const& s : corpus) {
      CHECK_NOTHROW(variety_member(s, v, Method::both));
    }
  }
}

TEST_CASE("monotonicity Sl, J, DS") {
  for (auto const& s : corpus_up_to_6()) {
    bool const sl = is_member(s, "Sl");
    bool const j  = is_member(s, "J");
    bool const ds = is_member(s, "DS");
    CHECK((!sl || j));
    CHECK((!j || ds));
  }
}

TEST_CASE("piecewise testable syntactic semigroups are J-trivial") {
  for (auto const& m : piecewise_syntactic({'a', 'b'}, 4)) {
    REQUIRE(variety_member(m.semigroup(), variety("J"), Method::both).member);
  }
  for (auto const& m : piecewise_syntactic({'a', 'b', 'c'}, 2)) {
    REQUIRE(is_member(m.semigroup(), "J"));
  }
}
