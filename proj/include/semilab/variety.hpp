#pragma once

// Pseudovariety membership: by a finite basis of pseudoidentities, by a
// structural check on the Cayley table, or both.
//
// Registered names: Sl, J, DS, N, K, D, LI, ECom, RS, DSRS, DG, G, Ab, and
// the parametric DV(V) and LV(V) for any registered V.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semilab/semigroup.hpp"
#include "semilab/term.hpp"

namespace semilab {

  enum class Method { basis, structural, both };

  std::string to_string(Method m);
  Method      parse_method(std::string const& text);  // throws InputError

  // A structural checker returns nullopt for members and a reason otherwise.
  using StructuralCheck
      = std::function<std::optional<std::string>(FiniteSemigroup const&)>;

  struct VarietyPredicate {
    std::string                          name;
    std::optional<std::vector<Pseudoidentity>> basis;
    StructuralCheck                      structural;  // may be empty
  };

  // Throws UnknownVariety.
  VarietyPredicate variety(std::string const& name);

  // Names accepted by variety(), without the parametric forms.
  std::vector<std::string> registered_varieties();

  struct MembershipReport {
    bool        member = true;
    std::string variety;
    Method      method = Method::both;
    // set when member is false
    std::optional<std::string>    reason;
    std::optional<Pseudoidentity> failed_identity;
    std::optional<Assignment>     counterexample;
  };

  // Throws MissingChecker when the requested method is unavailable and
  // PredicateDisagreement when method=both and the verdicts differ.
  MembershipReport variety_member(FiniteSemigroup const&  s,
                                  VarietyPredicate const& v,
                                  Method                  method);

  // Shorthand for the registered name with whatever checker exists,
  // preferring structural.
  bool is_member(FiniteSemigroup const& s, std::string const& variety_name);

}  // namespace semilab
