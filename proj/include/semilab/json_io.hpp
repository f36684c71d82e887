#pragma once

// JSON forms of semigroups and automata.
//
//   semigroup: {"name"?, "order": n, "elements"?: [str], "table": [[int]],
//               "identity"?: int}
//   automaton: {"alphabet": [str], "states": n, "initial": q,
//               "accepting": [q], "delta": {letter: [q or null or -1]}}
//
// Malformed documents raise InputError or one of its subclasses.

#include <filesystem>

#include <json.hpp>

#include "semilab/dfa.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

  using Json = nlohmann::ordered_json;

  Json            to_json(FiniteSemigroup const& s);
  FiniteSemigroup semigroup_from_json(Json const& j);

  Json to_json(Dfa const& d);
  Dfa  dfa_from_json(Json const& j);

  // Throws InputError when the file is missing or not JSON.
  Json            read_json(std::filesystem::path const& path);
  FiniteSemigroup read_semigroup(std::filesystem::path const& path);
  Dfa             read_dfa(std::filesystem::path const& path);

}  // namespace semilab
