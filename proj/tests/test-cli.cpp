#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "semilab/cli.hpp"
#include "semilab/corpus.hpp"
#include "semilab/json_io.hpp"
#include "semilab/variety.hpp"

using namespace semilab;

namespace {

  std::string const data = SEMILAB_TEST_DATA;

  struct Run {
    int         code;
    std::string out;
    std::string err;

    Json json() const {
      return Json::parse(out);
    }
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string file(char const* name) {
    return data + "/" + name;
  }

  // A fresh directory under the system temp dir.
  std::filesystem::path scratch(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / ("semilab-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
  }

  void write(std::filesystem::path const& path, Json const& j) {
    std::ofstream(path) << j.dump(2) << '\n';
  }

  // Every semigroup document the CLI emits must pass sg-check.
  void revalidates(Json const& semigroup, std::string const& tag) {
    auto const path = scratch("roundtrip-" + tag) / "s.json";
    write(path, semigroup);
    auto const r = run({"sg-check", path.string()});
    CHECK_MESSAGE(r.code == 0, tag, ": ", r.err);
    CHECK(r.json()["semigroup"] == semigroup);
  }

}  // namespace

TEST_CASE("documented examples") {
  auto const member = run({"sg-member", file("B2.json"), "--variety", "DS",
                           "--method", "both"});
  CHECK(member.code == 1);
  CHECK(member.json()["member"] == false);

  auto const eq = run({"jterm-eq", "(xy)^w", "(yx)^w"});
  CHECK(eq.code == 0);
  CHECK(eq.json()["equal"] == true);

  auto const bad = run({"sg-check", file("malformed.json")});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-verb"}).code == 2);
  CHECK(run({"sg-check", file("B2.json"), "--bogus"}).code == 2);
  CHECK(run({"sg-check", file("missing.json")}).code == 2);
  CHECK(run({"sg-member", file("B2.json")}).code == 2);
  CHECK(run({"sg-member", file("B2.json"), "--variety", "Nope"}).code == 2);
  CHECK(run({"sg-member", file("B2.json"), "--variety", "J", "--method",
             "guess"})
            .code
        == 2);
  CHECK(run({"jterm-nf", "(xy"}).code == 2);
  CHECK(run({"expand", file("Z2.json"), "--map", "a=q"}).code == 2);
  CHECK(run({"expand", file("B2.json"), "--map", "a=a"}).code == 2);
  CHECK(run({"lang-code", file("ab-plus.json"), "--side", "middle"}).code
        == 2);
  CHECK(run({"jterm-cut", "x^w", "x^w", "--oracle", "magic"}).code == 2);
  CHECK(run({"corpus-run", "--corpus", "everything"}).code == 2);
  auto const help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("sg-member") != std::string::npos);
}

TEST_CASE("semigroup verbs") {
  auto const check = run({"sg-check", file("B2.json")});
  CHECK(check.code == 0);
  CHECK(check.json()["order"] == 5);
  CHECK(check.json()["regular"] == true);

  auto const g = run({"sg-green", file("B2.json")}).json();
  CHECK(g["j_classes"].size() == 2);
  CHECK(g["h_classes"].size() == 5);
  CHECK(g["idempotents"] == Json({"ab", "ba", "0"}));

  auto const sl = run({"sg-member", file("S3.json"), "--variety", "G"});
  CHECK(sl.code == 0);
  CHECK(sl.json()["member"] == true);

  auto const sat = run({"sg-satisfies", file("B2.json"), "xy = yx"});
  CHECK(sat.code == 1);
  CHECK(sat.json()["counterexample"] == Json({{"x", "a"}, {"y", "b"}}));
  CHECK(run({"sg-satisfies", file("Z2.json"), "xy = yx"}).code == 0);
}

TEST_CASE("expansion verbs and round-trips") {
  auto const z2 = run({"expand", file("Z2.json"), "--mode", "monoid",
                       "--tower", "3"});
  REQUIRE(z2.code == 0);
  auto const j = z2.json();
  CHECK(j["expanded"]["order"] == 2);
  CHECK(j["tower"]["orders"] == Json({2, 2, 2, 2}));
  CHECK(j["tower"]["stabilized_at"] == 1);
  CHECK(j["regular_core_bijective"] == true);
  revalidates(j["expanded"], "z2");

  auto const semi = run({"expand", file("Z2.json"), "--map", "a=1"}).json();
  CHECK(semi["expanded"]["order"] == 3);
  CHECK(semi["projection"].size() == 3);
  revalidates(semi["expanded"], "z2-semigroup");

  auto const tower = run({"tower", file("trivial.json"), "--map", "a=0",
                          "--tower", "2"});
  REQUIRE(tower.code == 0);
  CHECK(tower.json()["orders"] == Json({1, 2, 4}));
  int n = 0;
  for (auto const& level : tower.json()["levels"]) {
    revalidates(level, "tower-" + std::to_string(n++));
  }

  auto const b2 = run({"expand", file("B2.json")}).json();
  CHECK(b2["map"] == Json({{"a", "a"}, {"b", "b"}}));
  revalidates(b2["expanded"], "b2");
}

TEST_CASE("language verbs") {
  auto const synt = run({"lang-syntactic", file("ab-plus.json")});
  REQUIRE(synt.code == 0);
  CHECK(synt.json()["order"] == 5);
  revalidates(synt.json()["syntactic"], "synt");
  CHECK(run({"lang-syntactic", file("ab-plus.json"), "--variety", "Sl"}).code
        == 1);
  CHECK(run({"lang-syntactic", file("contains-a.json"), "--variety", "Sl"})
            .code
        == 0);
  CHECK(run({"lang-syntactic", file("ab-plus.json"), "--cap", "3"}).code
        == 2);

  auto const prefix = run({"lang-code", file("ab-plus.json")});
  CHECK(prefix.code == 1);
  CHECK(prefix.json()["witness"] == Json({"ab", "abab"}));
  CHECK(run({"lang-code", file("b-plus.json"), "--side", "suffix"}).code
        == 1);

  auto const violated = run({"lang-probe", "--variety", "Sl", "-L", "ONE",
                             "-a", "a", "-K", "ONE"});
  CHECK(violated.code == 1);
  CHECK(violated.json()["verdict"] == "closure-violated");

  auto const holds = run({"lang-probe", "--variety", "J", "-L",
                          file("b-plus.json"), "-a", "a", "-K",
                          file("b-plus.json")});
  CHECK(holds.code == 0);
  CHECK(holds.json()["verdict"] == "closure-holds");
  revalidates(holds.json()["product_syntactic"], "probe");

  auto const na = run({"lang-probe", "--variety", "J", "-L",
                       file("contains-a.json"), "-a", "a", "-K", "ONE"});
  CHECK(na.code == 0);
  CHECK(na.json()["verdict"] == "not-applicable");
  CHECK(na.json()["failing_side"] == "prefix");

  CHECK(run({"lang-probe", "--variety", "J", "-L", "ONE", "-a", "c", "-K",
             file("b-plus.json")})
            .code
        == 2);
}

TEST_CASE("term verbs") {
  auto const nf = run({"jterm-nf", "a(bc)^w b (cb)^w"}).json();
  CHECK(nf["text"] == "a [bc]");
  CHECK(nf["normal_form"]
        == Json::parse(R"([{"word": "a"}, {"block": "bc"}])"));
  CHECK(nf["organized"]["words"] == Json({"a", "b", ""}));
  CHECK(nf["reduced"]["words"] == Json({"a", ""}));
  CHECK(nf["reduced"]["log"].size() == 2);

  auto const ne = run({"jterm-eq", "x^w y^w", "y^w x^w"});
  CHECK(ne.code == 1);
  CHECK(ne.json()["piecewise_witness"] == "xy");

  auto const cut = run({"jterm-cut", "p^w g q^w d p^w",
                        "p^w g q^w d p^w g q^w d p^w"});
  CHECK(cut.code == 1);
  CHECK(cut.json()["outcome"] == "Distinct");

  auto const same = run({"jterm-cut", "(xy)^w", "(yx)^w"});
  CHECK(same.code == 0);
  CHECK(same.json()["outcome"] == "Equal");

  auto const dir = scratch("oracle");
  std::size_t i = 0;
  for (auto const& s : exhaustive_corpus(3)) {
    if (is_member(s, "J")) {
      write(dir / ("j" + std::to_string(i++) + ".json"), to_json(s));
    }
  }
  for (auto const& m : piecewise_syntactic({'a', 'b'}, 2)) {
    write(dir / ("pt-" + m.subword + ".json"), to_json(m.semigroup()));
  }
  auto const oracle = "corpus:" + dir.string();
  auto const unknown = run({"jterm-cut", "(xy)^w", "(yx)^w", "--oracle",
                            oracle});
  CHECK(unknown.code == 0);
  CHECK(unknown.json()["outcome"] == "Unknown");
  auto const apart = run({"jterm-cut", "x^w y^w", "y^w x^w", "--oracle",
                          oracle});
  CHECK(apart.code == 1);
  CHECK(apart.json()["outcome"] == "Distinct");
}

TEST_CASE("corpus-run is reproducible") {
  std::vector<std::string> const args = {
      "corpus-run", "--corpus", "random:4:2:6", "--corpus", "exhaustive:2",
      "--variety", "J", "--variety", "DS", "--identity", "x^w y = x^w",
      "--seed", "42"};
  auto const first  = run(args);
  auto const second = run(args);
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
  auto const j = first.json();
  CHECK(j["count"] == 12);
  std::vector<std::string> keys;
  for (auto const& x : j["instances"]) {
    keys.push_back(x["key"]);
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));

  auto other = args;
  other.back() = "43";
  CHECK(run(other).out != first.out);
}
