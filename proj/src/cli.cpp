#include "semilab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "semilab/construct.hpp"
#include "semilab/corpus.hpp"
#include "semilab/dfa.hpp"
#include "semilab/error.hpp"
#include "semilab/expansion.hpp"
#include "semilab/green.hpp"
#include "semilab/jcalc.hpp"
#include "semilab/json_io.hpp"
#include "semilab/language.hpp"
#include "semilab/term.hpp"
#include "semilab/variety.hpp"

namespace semilab {

  namespace {

    struct Options {
      std::string              file;
      std::string              second;  // identity, term, ...
      std::string              variety_name;
      std::string              method;
      std::string              mode = "semigroup";
      std::size_t              tower = 0;
      std::string              side  = "prefix";
      std::string              l     = "ONE";
      std::string              k     = "ONE";
      std::string              marker;
      std::string              oracle = "j";
      std::uint64_t            seed   = 0;
      std::size_t              cap    = 0;
      std::vector<std::string> maps;
      std::string              alphabet;
      std::vector<std::string> corpora;
      std::vector<std::string> varieties;
      std::vector<std::string> identities;
    };

    // Result of a verb: the JSON document and whether the property holds.
    struct Outcome {
      Json doc;
      bool holds = true;
    };

    Json names(FiniteSemigroup const& s, std::vector<Element> const& xs) {
      Json j = Json::array();
      for (Element x : xs) {
        j.push_back(s.element_name(x));
      }
      return j;
    }

    Json classes(FiniteSemigroup const& s, Partition const& p) {
      Json j = Json::array();
      for (auto const& c : p) {
        j.push_back(names(s, c));
      }
      return j;
    }

    Json assignment_json(FiniteSemigroup const& s, Assignment const& a) {
      Json j = Json::object();
      for (char c : a.bound().letters()) {
        j[std::string(1, c)] = s.element_name(a[c]);
      }
      return j;
    }

    Element element_arg(FiniteSemigroup const& s, std::string const& text) {
      if (auto e = s.find_element(text)) {
        return *e;
      }
      if (!text.empty()
          && std::all_of(text.begin(), text.end(),
                         [](unsigned char c) { return std::isdigit(c); })) {
        unsigned long long const v = std::stoull(text);
        if (v < s.order()) {
          return static_cast<Element>(v);
        }
      }
      throw InputError("no element '" + text + "' in " + s.name());
    }

    std::size_t cap_or(Options const& o, std::size_t fallback) {
      return o.cap == 0 ? fallback : o.cap;
    }

    // --map a=x ...; without maps, letters a, b, ... go to a generating set.
    LetterMorphism letter_morphism(FiniteSemigroup const& s, Options const& o) {
      auto const mode = parse_mode(o.mode);
      std::vector<char>    letters;
      std::vector<Element> images;
      if (o.maps.empty()) {
        auto gens = generating_set(s);
        if (mode == MorphismMode::monoid && s.identity()) {
          std::erase(gens, *s.identity());
          if (gens.empty()) {
            gens.push_back(*s.identity());
          }
        }
        if (gens.size() > 26) {
          throw InputError("too many generators; pass --map explicitly");
        }
        for (std::size_t i = 0; i < gens.size(); ++i) {
          letters.push_back(static_cast<char>('a' + i));
          images.push_back(gens[i]);
        }
      }
      for (auto const& m : o.maps) {
        auto const eq = m.find('=');
        if (eq != 1 || !LetterSet::is_letter(m[0])) {
          throw InputError("--map expects letter=element, got '" + m + "'");
        }
        if (std::find(letters.begin(), letters.end(), m[0]) != letters.end()) {
          throw InputError(std::string("letter '") + m[0] + "' mapped twice");
        }
        letters.push_back(m[0]);
        images.push_back(element_arg(s, m.substr(2)));
      }
      return LetterMorphism(std::move(letters), s, std::move(images), mode);
    }

    std::optional<Method> method_arg(Options const& o) {
      if (o.method.empty()) {
        return std::nullopt;
      }
      return parse_method(o.method);
    }

    MembershipReport membership(FiniteSemigroup const&  s,
                                VarietyPredicate const& v,
                                std::optional<Method>   method) {
      Method const m = method ? *method
                       : v.structural ? Method::structural
                                      : Method::basis;
      return variety_member(s, v, m);
    }

    Json membership_json(FiniteSemigroup const& s, MembershipReport const& r) {
      Json j = Json::object();
      j["variety"] = r.variety;
      j["method"]  = to_string(r.method);
      j["member"]  = r.member;
      if (r.reason) {
        j["reason"] = *r.reason;
      }
      if (r.failed_identity) {
        j["failed_identity"] = to_string(*r.failed_identity);
      }
      if (r.counterexample) {
        j["counterexample"] = assignment_json(s, *r.counterexample);
      }
      return j;
    }

    Json nf_json(JNormalForm const& nf) {
      Json j = Json::array();
      for (auto const& i : nf) {
        if (i.is_word()) {
          j.push_back({{"word", i.word}});
        } else {
          j.push_back({{"block", i.block.letters()}});
        }
      }
      return j;
    }

    Json block_json(ReducedBlock const& b) {
      Json contents = Json::array();
      for (auto c : b.contents) {
        contents.push_back(c.letters());
      }
      return {{"contents", contents}, {"term", to_string(b.term)}};
    }

    Json reduction_json(Reduction const& r) {
      Json blocks = Json::array();
      for (auto const& b : r.result.blocks) {
        blocks.push_back(block_json(b));
      }
      return {{"words", r.result.words}, {"blocks", blocks}, {"log", r.log}};
    }

    Json organized_json(OrganizedFactorization const& f) {
      Json blocks = Json::array();
      for (auto const& b : f.blocks) {
        Json powers = Json::array();
        for (auto const& p : b) {
          powers.push_back(to_string(p));
        }
        blocks.push_back(std::move(powers));
      }
      return {{"words", f.words}, {"blocks", blocks}};
    }

    std::vector<FiniteSemigroup> corpus_dir(std::filesystem::path const& dir) {
      if (!std::filesystem::is_directory(dir)) {
        throw InputError(dir.string() + " is not a directory");
      }
      std::vector<std::filesystem::path> files;
      for (auto const& e : std::filesystem::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".json") {
          files.push_back(e.path());
        }
      }
      std::sort(files.begin(), files.end());
      std::vector<FiniteSemigroup> out;
      for (auto const& f : files) {
        auto s = read_semigroup(f);
        if (s.name().empty()) {
          s = s.renamed(f.stem().string());
        }
        out.push_back(std::move(s));
      }
      return out;
    }

    std::vector<std::string> split(std::string const& text, char sep) {
      std::vector<std::string> out;
      std::stringstream        in(text);
      std::string              part;
      while (std::getline(in, part, sep)) {
        out.push_back(part);
      }
      return out;
    }

    std::size_t number(std::string const& text, std::string const& what) {
      try {
        std::size_t used = 0;
        auto const  v    = std::stoull(text, &used);
        if (used == text.size()) {
          return static_cast<std::size_t>(v);
        }
      } catch (std::exception const&) {
      }
      throw InputError(what + " must be a number, got '" + text + "'");
    }

    // Named instances of a corpus spec, keyed for sorting.
    std::vector<std::pair<std::string, FiniteSemigroup>>
    corpus_instances(std::string const& spec, std::uint64_t seed) {
      auto const parts = split(spec, ':');
      std::vector<FiniteSemigroup> members;
      std::string const            kind = parts.empty() ? "" : parts[0];
      if (kind == "exhaustive" && parts.size() == 2) {
        members = small_corpus(Exhaustive{number(parts[1], "order")});
      } else if (kind == "random" && parts.size() == 4) {
        members = small_corpus(RandomTransformation{
            number(parts[1], "degree"), number(parts[2], "generators"), seed,
            number(parts[3], "count")});
      } else if (kind == "piecewise" && parts.size() == 3) {
        members = small_corpus(PiecewiseSyntactic{
            std::vector<char>(parts[1].begin(), parts[1].end()),
            number(parts[2], "length")});
      } else if (kind == "dir" && parts.size() >= 2) {
        members = corpus_dir(spec.substr(4));
      } else {
        throw InputError("unknown corpus '" + spec
                         + "'; expected exhaustive:N, random:DEGREE:GENS:COUNT,"
                           " piecewise:LETTERS:K or dir:PATH");
      }
      std::vector<std::pair<std::string, FiniteSemigroup>> out;
      for (std::size_t i = 0; i < members.size(); ++i) {
        char key[32];
        std::snprintf(key, sizeof key, "%05zu", i);
        out.emplace_back(spec + "/" + key, std::move(members[i]));
      }
      return out;
    }

    LanguageOperand operand(std::string const& text) {
      if (text == "ONE") {
        return One{};
      }
      return read_dfa(text);
    }

    Json semigroup_summary(FiniteSemigroup const& s) {
      auto const g = green(s);
      return {{"name", s.name()},
              {"order", s.order()},
              {"identity", s.identity() ? Json(s.element_name(*s.identity()))
                                        : Json(nullptr)},
              {"idempotents", names(s, g.idempotents)},
              {"regular", g.regular.size() == s.order()}};
    }

    // ------------------------------------------------------------------ verbs

    Outcome sg_check(Options const& o) {
      auto const s   = read_semigroup(o.file);
      Json       doc = {{"valid", true}};
      doc.update(semigroup_summary(s));
      doc["semigroup"] = to_json(s);
      return {doc, true};
    }

    Outcome sg_green(Options const& o) {
      auto const s = read_semigroup(o.file);
      auto const g = green(s);
      Json       doc{{"order", s.order()},
                     {"idempotents", names(s, g.idempotents)},
                     {"regular", names(s, g.regular)},
                     {"is_regular", g.regular.size() == s.order()},
                     {"r_classes", classes(s, g.r_classes)},
                     {"l_classes", classes(s, g.l_classes)},
                     {"j_classes", classes(s, g.j_classes)},
                     {"h_classes", classes(s, g.h_classes)}};
      return {doc, true};
    }

    Outcome sg_member(Options const& o) {
      auto const s = read_semigroup(o.file);
      auto const r = membership(s, variety(o.variety_name), method_arg(o));
      return {membership_json(s, r), r.member};
    }

    Outcome sg_satisfies(Options const& o) {
      auto const s   = read_semigroup(o.file);
      auto const p   = parse_pseudoidentity(o.second);
      auto const sat = satisfies(s, p);
      Json doc{{"identity", to_string(p)}, {"holds", sat.holds}};
      if (sat.counterexample) {
        doc["counterexample"] = assignment_json(s, *sat.counterexample);
      }
      return {doc, sat.holds};
    }

    Json expansion_json(LetterMorphism const& phi, ExpansionResult const& r) {
      SignatureAlgebra const algebra(phi);
      Json letters = Json::object();
      for (char c : r.phi_bd.alphabet()) {
        letters[std::string(1, c)] = r.expanded.element_name(r.phi_bd.image(c));
      }
      Json sigs = Json::array();
      for (auto const& sig : r.signatures) {
        sigs.push_back(algebra.describe(sig));
      }
      auto const core = regular_core_check(r);
      return {{"expanded", to_json(r.expanded)},
              {"letters", letters},
              {"projection", r.projection},
              {"signatures", sigs},
              {"regular_core_bijective", core.passed}};
    }

    Json tower_json(ExpansionTower const& t) {
      Json levels = Json::array();
      for (std::size_t n = 0; n <= t.levels.size(); ++n) {
        levels.push_back(to_json(t.level(n)));
      }
      return {{"orders", t.orders()},
              {"stabilized_at",
               t.stabilized_at ? Json(*t.stabilized_at) : Json(nullptr)},
              {"levels", levels}};
    }

    Outcome expand_verb(Options const& o) {
      auto const s   = read_semigroup(o.file);
      auto const phi = letter_morphism(s, o);
      auto const r   = expand(phi, cap_or(o, default_signature_cap));
      Json       doc{{"mode", to_string(phi.mode())}, {"target", s.name()}};
      Json       map = Json::object();
      for (char c : phi.alphabet()) {
        map[std::string(1, c)] = s.element_name(phi.image(c));
      }
      doc["map"] = map;
      doc.update(expansion_json(phi, r));
      if (o.tower > 0) {
        doc["tower"] = tower_json(
            expansion_tower(phi, o.tower, cap_or(o, default_signature_cap)));
      }
      return {doc, true};
    }

    Outcome tower_verb(Options const& o) {
      auto const s   = read_semigroup(o.file);
      auto const phi = letter_morphism(s, o);
      auto const t   = expansion_tower(phi, o.tower == 0 ? 3 : o.tower,
                                       cap_or(o, default_signature_cap));
      Json doc{{"mode", to_string(phi.mode())}, {"target", s.name()}};
      doc.update(tower_json(t));
      return {doc, true};
    }

    Outcome lang_syntactic(Options const& o) {
      auto const d = read_dfa(o.file);
      auto const synt =
          syntactic_semigroup(d, cap_or(o, default_transformation_cap));
      Json letters = Json::object();
      for (char c : d.alphabet()) {
        letters[std::string(1, c)] =
            synt.semigroup.element_name(synt.morphism.image(c));
      }
      Json doc{{"minimal", to_json(minimize(d))},
               {"order", synt.semigroup.order()},
               {"letters", letters},
               {"syntactic", to_json(synt.semigroup)}};
      bool holds = true;
      if (!o.variety_name.empty()) {
        auto const r = membership(synt.semigroup, variety(o.variety_name),
                                  method_arg(o));
        doc["membership"] = membership_json(synt.semigroup, r);
        holds             = r.member;
      }
      return {doc, holds};
    }

    Outcome lang_code(Options const& o) {
      auto const d       = read_dfa(o.file);
      auto const side    = parse_side(o.side);
      auto const verdict = is_code(d, side);
      Json doc{{"side", to_string(side)}, {"code", verdict.holds}};
      if (verdict.witness) {
        doc["witness"] = {verdict.witness->first, verdict.witness->second};
      }
      return {doc, verdict.holds};
    }

    Outcome lang_probe(Options const& o) {
      if (o.marker.size() != 1) {
        throw InputError("-a expects a single letter");
      }
      std::optional<std::vector<char>> alphabet;
      if (!o.alphabet.empty()) {
        alphabet = std::vector<char>(o.alphabet.begin(), o.alphabet.end());
      }
      auto const r = closure_probe(variety(o.variety_name), operand(o.l),
                                   o.marker[0], operand(o.k), alphabet);
      Json doc{{"variety", o.variety_name},
               {"l_status", to_string(r.l_status)},
               {"k_status", to_string(r.k_status)},
               {"bidet", r.bidet}};
      if (r.failing_side) {
        doc["failing_side"] = *r.failing_side;
      }
      if (r.witness) {
        doc["witness"] = {r.witness->first, r.witness->second};
      }
      doc["product"]            = to_json(r.product);
      doc["product_syntactic"]  = to_json(r.product_syntactic);
      doc["product_in_variety"] = r.product_in_variety;
      doc["verdict"]            = to_string(r.verdict);
      return {doc, r.verdict != ProbeVerdict::closure_violated};
    }

    Outcome jterm_nf(Options const& o) {
      auto const t  = parse_term(o.file);
      auto const nf = j_normal_form(t);
      auto const f  = organize(t);
      Json doc{{"term", to_string(t)},
               {"normal_form", nf_json(nf)},
               {"text", to_string(nf)},
               {"organized", organized_json(f)},
               {"reduced", reduction_json(reduce_to_short_breaks(f))}};
      return {doc, true};
    }

    Outcome jterm_eq(Options const& o) {
      auto const u     = parse_term(o.file);
      auto const v     = parse_term(o.second);
      bool const equal = j_equal(u, v);
      Json doc{{"left", to_string(u)},
               {"right", to_string(v)},
               {"equal", equal},
               {"left_normal_form", to_string(j_normal_form(u))},
               {"right_normal_form", to_string(j_normal_form(v))}};
      if (!equal) {
        auto const w = piecewise_witness(u, v);
        doc["piecewise_witness"] = w ? Json(*w) : Json(nullptr);
      }
      return {doc, equal};
    }

    Outcome jterm_cut(Options const& o) {
      auto const  u = parse_term(o.file);
      auto const  v = parse_term(o.second);
      BlockOracle oracle;
      if (o.oracle == "j") {
        oracle = JContentOracle{};
      } else if (o.oracle.starts_with("corpus:")) {
        oracle = CorpusOracle{corpus_dir(o.oracle.substr(7))};
      } else {
        throw InputError("--oracle expects j or corpus:<dir>, got '"
                         + o.oracle + "'");
      }
      auto const verdict = cut_compare(u, v, oracle);
      Json       pairs   = Json::array();
      for (auto const& p : verdict.block_pairs) {
        pairs.push_back({{"index", p.index},
                         {"left", block_json(p.left)},
                         {"right", block_json(p.right)},
                         {"equal", p.equal ? Json(*p.equal) : Json(nullptr)},
                         {"witness", p.witness ? Json(*p.witness)
                                               : Json(nullptr)}});
      }
      Json doc{{"outcome", to_string(verdict.outcome)},
               {"position",
                verdict.position ? Json(*verdict.position) : Json(nullptr)},
               {"reason", verdict.reason},
               {"block_pairs", pairs},
               {"left", reduction_json(reduce_to_short_breaks(organize(u)))},
               {"right", reduction_json(reduce_to_short_breaks(organize(v)))}};
      return {doc, verdict.outcome != CutOutcome::distinct};
    }

    Outcome corpus_run(Options const& o) {
      auto specs = o.corpora;
      if (specs.empty()) {
        specs.push_back("exhaustive:3");
      }
      auto names_list = o.varieties;
      if (names_list.empty()) {
        names_list = registered_varieties();
      }
      std::vector<VarietyPredicate> vs;
      for (auto const& n : names_list) {
        vs.push_back(variety(n));
      }
      std::vector<Pseudoidentity> ids;
      for (auto const& text : o.identities) {
        ids.push_back(parse_pseudoidentity(text));
      }
      auto const method = method_arg(o);

      std::vector<std::pair<std::string, FiniteSemigroup>> instances;
      for (auto const& spec : specs) {
        auto more = corpus_instances(spec, o.seed);
        instances.insert(instances.end(), std::make_move_iterator(more.begin()),
                         std::make_move_iterator(more.end()));
      }
      std::stable_sort(instances.begin(), instances.end(),
                       [](auto const& x, auto const& y) {
                         return x.first < y.first;
                       });

      Json reports = Json::array();
      for (auto const& [key, s] : instances) {
        Json entry{{"key", key}};
        entry.update(semigroup_summary(s));
        Json members = Json::object();
        for (auto const& v : vs) {
          members[v.name] = membership(s, v, method).member;
        }
        entry["members"] = members;
        if (!ids.empty()) {
          Json sat = Json::object();
          for (auto const& p : ids) {
            sat[to_string(p)] = satisfies(s, p).holds;
          }
          entry["satisfies"] = sat;
        }
        reports.push_back(std::move(entry));
      }
      Json doc{{"seed", o.seed},
               {"corpora", specs},
               {"count", reports.size()},
               {"instances", reports}};
      return {doc, true};
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Finite semigroups, expansions, regular languages and "
                 "omega-terms modulo J.",
                 "semilab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every command");

    Options                        o;
    std::function<Outcome()>       action;
    auto const verb = [&](char const* name, char const* about,
                          Outcome (*fn)(Options const&)) {
      auto* sub = app.add_subcommand(name, about);
      sub->callback([&action, fn, &o] { action = [fn, &o] { return fn(o); }; });
      return sub;
    };
    auto const file = [&](CLI::App* sub, char const* what) {
      sub->add_option("file", o.file, what)->required();
    };
    auto const cap = [&](CLI::App* sub) {
      sub->add_option("--cap", o.cap, "Size limit for generated structures");
    };
    auto const method = [&](CLI::App* sub) {
      sub->add_option("--method", o.method, "basis, structural or both")
          ->check(CLI::IsMember({"basis", "structural", "both"}));
    };
    auto const morphism = [&](CLI::App* sub) {
      sub->add_option("--map", o.maps, "Letter image, e.g. a=x (repeatable)");
      sub->add_option("--mode", o.mode, "monoid or semigroup")
          ->check(CLI::IsMember({"monoid", "semigroup"}));
      cap(sub);
    };

    file(verb("sg-check", "Validate a semigroup file", sg_check),
         "Semigroup JSON");
    file(verb("sg-green", "Green's relations", sg_green), "Semigroup JSON");

    auto* member = verb("sg-member", "Variety membership", sg_member);
    file(member, "Semigroup JSON");
    member->add_option("--variety", o.variety_name, "Variety name")
        ->required();
    method(member);

    auto* sat = verb("sg-satisfies", "Check a pseudoidentity", sg_satisfies);
    file(sat, "Semigroup JSON");
    sat->add_option("identity", o.second, "\"u = v\"")->required();

    auto* exp = verb("expand", "Expansion of a letter morphism", expand_verb);
    file(exp, "Semigroup JSON");
    morphism(exp);
    exp->add_option("--tower", o.tower, "Also iterate the expansion N times");

    auto* tow = verb("tower", "Iterated expansions", tower_verb);
    file(tow, "Semigroup JSON");
    morphism(tow);
    tow->add_option("--tower", o.tower, "Number of iterations (default 3)");

    auto* syn = verb("lang-syntactic", "Syntactic semigroup of an automaton",
                     lang_syntactic);
    file(syn, "Automaton JSON");
    syn->add_option("--variety", o.variety_name, "Also test membership");
    method(syn);
    cap(syn);

    auto* code = verb("lang-code", "Prefix or suffix code test", lang_code);
    file(code, "Automaton JSON");
    code->add_option("--side", o.side, "prefix or suffix")
        ->check(CLI::IsMember({"prefix", "suffix"}));

    auto* probe = app.add_subcommand("lang-probe",
                                     "Closure under bideterministic product");
    probe->callback([&] { action = [&] { return lang_probe(o); }; });
    probe->add_option("--variety", o.variety_name, "Variety name")->required();
    probe->add_option("-L", o.l, "Automaton JSON or ONE")->required();
    probe->add_option("-a", o.marker, "Marker letter")->required();
    probe->add_option("-K", o.k, "Automaton JSON or ONE")->required();
    probe->add_option("--alphabet", o.alphabet,
                      "Letters, needed when both operands are ONE");

    verb("jterm-nf", "Normal form modulo J", jterm_nf)
        ->add_option("term", o.file, "omega-term")
        ->required();

    auto* eq = verb("jterm-eq", "Equality modulo J", jterm_eq);
    eq->add_option("u", o.file, "omega-term")->required();
    eq->add_option("v", o.second, "omega-term")->required();

    auto* cut = verb("jterm-cut", "Compare organized factorizations",
                     jterm_cut);
    cut->add_option("u", o.file, "omega-term")->required();
    cut->add_option("v", o.second, "omega-term")->required();
    cut->add_option("--oracle", o.oracle, "j or corpus:<dir>");

    auto* run = verb("corpus-run", "Batch report over generated semigroups",
                     corpus_run);
    run->add_option("--corpus", o.corpora,
                    "exhaustive:N, random:DEGREE:GENS:COUNT, "
                    "piecewise:LETTERS:K or dir:PATH (repeatable)");
    run->add_option("--variety", o.varieties, "Varieties (repeatable)");
    run->add_option("--identity", o.identities,
                    "Pseudoidentities (repeatable)");
    method(run);

    run->add_option("--seed", o.seed, "Seed for random corpora (default 0)");

    std::vector<std::string> argv{"semilab"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<char const*> ptrs;
    for (auto const& a : argv) {
      ptrs.push_back(a.c_str());
    }

    try {
      app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
      auto const result = action();
      out << result.doc.dump(2) << '\n';
      return result.holds ? 0 : 1;
    } catch (Error const& e) {
      err << "semilab: " << e.what() << '\n';
      return 2;
    } catch (nlohmann::json::exception const& e) {
      err << "semilab: " << e.what() << '\n';
      return 2;
    } catch (std::filesystem::filesystem_error const& e) {
      err << "semilab: " << e.what() << '\n';
      return 2;
    }
  }

}  // namespace semilab
