#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semilab/construct.hpp"
#include "semilab/corpus.hpp"
#include "semilab/error.hpp"
#include "semilab/json_io.hpp"

using namespace semilab;

namespace {

  std::string const data = SEMILAB_TEST_DATA;

}  // namespace

TEST_CASE("semigroup documents round-trip") {
  std::vector<FiniteSemigroup> all = exhaustive_corpus(3);
  all.push_back(named::brandt_b2());
  all.push_back(named::symmetric_group_s3());
  for (auto const& s : all) {
    auto const back = semigroup_from_json(to_json(s));
    CHECK(back == s);
    CHECK(back.name() == s.name());
    CHECK(back.element_names() == s.element_names());
    // through text as well
    CHECK(semigroup_from_json(Json::parse(to_json(s).dump())) == s);
  }
  auto const b2 = read_semigroup(data + "/B2.json");
  CHECK(b2 == named::brandt_b2());
  CHECK(b2.name() == "B2");
}

TEST_CASE("semigroup documents are validated") {
  auto const bad = [](char const* text) {
    return semigroup_from_json(Json::parse(text));
  };
  CHECK_NOTHROW(bad(R"({"order": 1, "table": [[0]]})"));
  CHECK_NOTHROW(bad(R"({"order": 1, "table": [[0]], "identity": 0})"));
  CHECK_THROWS_AS(bad(R"({"order": 2, "table": [[0,1],[1]]})"),
                  IndexOutOfRange);
  CHECK_THROWS_AS(bad(R"({"order": 2, "table": [[0,2],[1,0]]})"),
                  IndexOutOfRange);
  CHECK_THROWS_AS(bad(R"({"order": 2, "table": [[0,-1],[1,0]]})"),
                  IndexOutOfRange);
  // x(yz) != (xy)z
  CHECK_THROWS_AS(bad(R"({"order": 2, "table": [[1,0],[0,0]]})"),
                  NonAssociative);
  CHECK_THROWS_AS(bad(R"({"table": [[0]]})"), InputError);
  CHECK_THROWS_AS(bad(R"({"order": 1})"), InputError);
  CHECK_THROWS_AS(bad(R"({"order": "1", "table": [[0]]})"), InputError);
  CHECK_THROWS_AS(bad(R"({"order": 1, "table": [["0"]]})"), InputError);
  CHECK_THROWS_AS(bad(R"({"order": 1, "table": [[0]], "elements": []})"),
                  InputError);
  CHECK_THROWS_AS(bad(R"({"order": 2, "table": [[0,0],[0,0]],
                          "identity": 1})"),
                  InputError);
  CHECK_THROWS_AS(bad(R"([1, 2])"), InputError);
  CHECK_THROWS_AS(read_semigroup(data + "/malformed.json"), InputError);
  CHECK_THROWS_AS(read_semigroup(data + "/no-such-file.json"), InputError);
}

TEST_CASE("automaton documents") {
  auto const d = read_dfa(data + "/ab-plus.json");
  CHECK(d.states() == 4);
  CHECK(d.accepts("ab"));
  CHECK(d.accepts("abab"));
  CHECK_FALSE(d.accepts("aba"));
  CHECK(dfa_from_json(to_json(d)) == d);

  // {a} over {a, b} with a partial table: a sink is added
  auto const single = dfa_from_json(Json::parse(R"({
    "alphabet": ["a", "b"], "states": 2, "initial": 0, "accepting": [1],
    "delta": {"a": [1, null], "b": [-1, -1]}})"));
  CHECK(single.states() == 3);
  CHECK(single.accepts("a"));
  CHECK_FALSE(single.accepts("aa"));
  CHECK_FALSE(single.accepts("b"));

  auto const missing_row = dfa_from_json(Json::parse(R"({
    "alphabet": ["a", "b"], "states": 2, "initial": 0, "accepting": [1],
    "delta": {"a": [1, 1]}})"));
  CHECK(missing_row.accepts("aaa"));
  CHECK_FALSE(missing_row.accepts("ab"));

  auto const bad = [](char const* text) {
    return dfa_from_json(Json::parse(text));
  };
  CHECK_THROWS_AS(bad(R"({"alphabet": ["a"], "states": 4, "initial": 0,
                          "accepting": [], "delta": {"a": [1, 2, 9, 0]}})"),
                  BadState);
  CHECK_THROWS_AS(bad(R"({"alphabet": ["a"], "states": 2, "initial": 5,
                          "accepting": [], "delta": {"a": [1, 0]}})"),
                  BadState);
  CHECK_THROWS_AS(bad(R"({"alphabet": ["a"], "states": 2, "initial": 0,
                          "accepting": [2], "delta": {"a": [1, 0]}})"),
                  BadState);
  CHECK_THROWS_AS(bad(R"({"alphabet": ["a"], "states": 2, "initial": 0,
                          "accepting": [], "delta": {"a": [1, -4]}})"),
                  BadState);
  CHECK_THROWS_AS(bad(R"({"alphabet": ["a"], "states": 2, "initial": 0,
                          "accepting": [], "delta": {"a": [1]}})"),
                  BadTransition);
  CHECK_THROWS_AS(bad(R"({"alphabet": ["a"], "states": 2, "initial": 0,
                          "accepting": [], "delta": {"c": [1, 0]}})"),
                  BadTransition);
  CHECK_THROWS_AS(bad(R"({"alphabet": ["ab"], "states": 1, "initial": 0,
                          "accepting": [], "delta": {}})"),
                  BadTransition);
  CHECK_THROWS_AS(bad(R"({"alphabet": ["a", "a"], "states": 1, "initial": 0,
                          "accepting": [], "delta": {}})"),
                  BadTransition);
}
