#include "semilab/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "semilab/error.hpp"

namespace semilab {

  namespace {

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object()) {
        throw InputError("expected a JSON object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw InputError(std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    std::size_t count(Json const& j, char const* what) {
      if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw InputError(std::string(what) + " must be a nonnegative integer");
      }
      return j.get<std::size_t>();
    }

    long long integer(Json const& j, char const* what) {
      if (!j.is_number_integer()) {
        throw InputError(std::string(what) + " must be an integer");
      }
      return j.get<long long>();
    }

    State state(Json const& j, std::size_t states, char const* what) {
      auto const q = integer(j, what);
      if (q < 0 || static_cast<unsigned long long>(q) >= states) {
        throw BadState(std::string(what) + " " + j.dump() + " is not one of "
                       + std::to_string(states) + " states");
      }
      return static_cast<State>(q);
    }

  }  // namespace

  Json to_json(FiniteSemigroup const& s) {
    Json j = Json::object();
    if (!s.name().empty()) {
      j["name"] = s.name();
    }
    j["order"] = s.order();
    if (!s.element_names().empty()) {
      j["elements"] = s.element_names();
    }
    Json rows = Json::array();
    for (Element a = 0; a < s.order(); ++a) {
      rows.push_back(std::vector<Element>(s.row(a).begin(), s.row(a).end()));
    }
    j["table"] = std::move(rows);
    if (auto e = s.identity()) {
      j["identity"] = *e;
    }
    return j;
  }

  FiniteSemigroup semigroup_from_json(Json const& j) {
    std::size_t const n     = count(field(j, "order"), "order");
    auto const&       table = field(j, "table");
    if (!table.is_array()) {
      throw InputError("table must be an array of rows");
    }
    std::vector<std::vector<Element>> rows;
    for (auto const& row : table) {
      if (!row.is_array()) {
        throw InputError("table rows must be arrays");
      }
      auto& r = rows.emplace_back();
      for (auto const& x : row) {
        auto const e = integer(x, "table entries");
        if (e < 0 || static_cast<unsigned long long>(e) >= n) {
          throw IndexOutOfRange(rows.size() - 1, r.size(),
                                "entry " + x.dump() + " is not an element");
        }
        r.push_back(static_cast<Element>(e));
      }
    }
    std::vector<std::string> names;
    if (auto it = j.find("elements"); it != j.end()) {
      if (!it->is_array() || it->size() != n) {
        throw InputError("elements must list one name per element");
      }
      for (auto const& x : *it) {
        if (!x.is_string()) {
          throw InputError("element names must be strings");
        }
        names.push_back(x.get<std::string>());
      }
    }
    std::string name;
    if (auto it = j.find("name"); it != j.end()) {
      if (!it->is_string()) {
        throw InputError("name must be a string");
      }
      name = it->get<std::string>();
    }
    auto s = build_semigroup(n, rows, std::move(names), std::move(name));
    if (auto it = j.find("identity"); it != j.end() && !it->is_null()) {
      auto const e = integer(*it, "identity");
      if (!s.identity() || static_cast<long long>(*s.identity()) != e) {
        throw InputError("element " + it->dump() + " is not an identity");
      }
    }
    return s;
  }

  Json to_json(Dfa const& d) {
    Json j = Json::object();
    Json alphabet = Json::array();
    for (char c : d.alphabet()) {
      alphabet.push_back(std::string(1, c));
    }
    j["alphabet"]  = std::move(alphabet);
    j["states"]    = d.states();
    j["initial"]   = d.initial();
    j["accepting"] = d.accepting_states();
    Json delta     = Json::object();
    for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
      delta[std::string(1, d.alphabet()[i])] = d.row(i);
    }
    j["delta"] = std::move(delta);
    return j;
  }

  Dfa dfa_from_json(Json const& j) {
    auto const& letters = field(j, "alphabet");
    if (!letters.is_array()) {
      throw BadTransition("alphabet must be an array of one-letter strings");
    }
    std::vector<char> alphabet;
    for (auto const& x : letters) {
      if (!x.is_string() || x.get<std::string>().size() != 1) {
        throw BadTransition("alphabet entries must be one-letter strings");
      }
      alphabet.push_back(x.get<std::string>()[0]);
    }
    std::size_t const n = count(field(j, "states"), "states");
    State const initial = state(field(j, "initial"), n, "initial state");

    auto const& acc = field(j, "accepting");
    if (!acc.is_array()) {
      throw BadState("accepting must be an array of states");
    }
    std::vector<State> accepting;
    for (auto const& x : acc) {
      accepting.push_back(state(x, n, "accepting state"));
    }

    auto const& table = field(j, "delta");
    if (!table.is_object()) {
      throw BadTransition("delta must map letters to rows");
    }
    for (auto const& [key, row] : table.items()) {
      if (key.size() != 1
          || std::find(alphabet.begin(), alphabet.end(), key[0])
                 == alphabet.end()) {
        throw BadTransition("delta has a row for '" + key
                            + "', which is not in the alphabet");
      }
    }
    std::vector<std::vector<State>> delta(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      auto it = table.find(std::string(1, alphabet[i]));
      if (it == table.end()) {
        delta[i].assign(n, Dfa::none);
        continue;
      }
      if (!it->is_array()) {
        throw BadTransition(std::string("row for '") + alphabet[i]
                            + "' must be an array");
      }
      for (auto const& x : *it) {
        bool const partial = x.is_null()
                             || (x.is_number_integer() && x.get<long long>() == -1);
        delta[i].push_back(partial ? Dfa::none : state(x, n, "transition"));
      }
    }
    return Dfa(std::move(alphabet), n, initial, accepting, std::move(delta));
  }

  Json read_json(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open " + path.string());
    }
    try {
      return Json::parse(in);
    } catch (nlohmann::json::parse_error const& e) {
      throw InputError(path.string() + ": " + e.what());
    }
  }

  FiniteSemigroup read_semigroup(std::filesystem::path const& path) {
    return semigroup_from_json(read_json(path));
  }

  Dfa read_dfa(std::filesystem::path const& path) {
    return dfa_from_json(read_json(path));
  }

}  // namespace semilab
