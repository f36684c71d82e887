#include "semilab/variety.hpp"

#include <algorithm>

#include "semilab/construct.hpp"
#include "semilab/error.hpp"
#include "semilab/green.hpp"

namespace semilab {

  std::string to_string(Method m) {
    switch (m) {
      case Method::basis:
        return "basis";
      case Method::structural:
        return "structural";
      case Method::both:
        return "both";
    }
    return {};
  }

  Method parse_method(std::string const& text) {
    if (text == "basis") {
      return Method::basis;
    }
    if (text == "structural") {
      return Method::structural;
    }
    if (text == "both") {
      return Method::both;
    }
    throw InputError("unknown method '" + text
                     + "' (expected basis, structural or both)");
  }

  namespace {

    using Reason = std::optional<std::string>;

    std::string show(FiniteSemigroup const& s, Element x) {
      return s.element_name(x);
    }

    std::string show_product(FiniteSemigroup const& s, Element x, Element y) {
      return show(s, x) + "*" + show(s, y) + " = " + show(s, s(x, y));
    }

    std::string show_class(FiniteSemigroup const&      s,
                           std::vector<Element> const& cls) {
      std::string out = "{";
      for (std::size_t i = 0; i < cls.size(); ++i) {
        out += (i ? "," : "") + show(s, cls[i]);
      }
      return out + "}";
    }

    std::vector<Element> idempotents(FiniteSemigroup const& s) {
      std::vector<Element> e;
      for (Element x = 0; x < s.order(); ++x) {
        if (s.is_idempotent(x)) {
          e.push_back(x);
        }
      }
      return e;
    }

    std::vector<std::vector<Element>> regular_j_classes(GreenSummary const& g) {
      std::vector<std::vector<Element>> out;
      for (auto const& cls : g.j_classes) {
        if (g.is_regular(cls.front())) {
          out.push_back(cls);
        }
      }
      return out;
    }

    Reason closed(FiniteSemigroup const& s, std::vector<Element> const& cls,
                  GreenSummary const& g) {
      for (Element x : cls) {
        for (Element y : cls) {
          if (!g.j_equivalent(s(x, y), x)) {
            return "regular J-class " + show_class(s, cls)
                   + " is not closed: " + show_product(s, x, y);
          }
        }
      }
      return std::nullopt;
    }

    Reason check_sl(FiniteSemigroup const& s) {
      for (Element x = 0; x < s.order(); ++x) {
        if (!s.is_idempotent(x)) {
          return show(s, x) + " is not idempotent";
        }
        for (Element y = 0; y < x; ++y) {
          if (s(x, y) != s(y, x)) {
            return show_product(s, x, y) + " but " + show_product(s, y, x);
          }
        }
      }
      return std::nullopt;
    }

    Reason check_j(FiniteSemigroup const& s) {
      auto const g = green(s);
      for (auto const& cls : regular_j_classes(g)) {
        if (cls.size() > 1) {
          return "regular J-class " + show_class(s, cls) + " is not trivial";
        }
      }
      return std::nullopt;
    }

    Reason check_ds(FiniteSemigroup const& s) {
      auto const g = green(s);
      for (auto const& cls : regular_j_classes(g)) {
        if (auto r = closed(s, cls, g)) {
          return r;
        }
      }
      return std::nullopt;
    }

    Reason check_n(FiniteSemigroup const& s) {
      auto const e = idempotents(s);
      if (e.size() != 1) {
        return std::to_string(e.size()) + " idempotents";
      }
      for (Element x = 0; x < s.order(); ++x) {
        if (s(x, e[0]) != e[0] || s(e[0], x) != e[0]) {
          return "idempotent " + show(s, e[0]) + " is not a zero";
        }
      }
      return std::nullopt;
    }

    Reason check_k(FiniteSemigroup const& s) {
      for (Element e : idempotents(s)) {
        for (Element x = 0; x < s.order(); ++x) {
          if (s(e, x) != e) {
            return "idempotent " + show(s, e) + " is not a left zero: "
                   + show_product(s, e, x);
          }
        }
      }
      return std::nullopt;
    }

    Reason check_d(FiniteSemigroup const& s) {
      for (Element e : idempotents(s)) {
        for (Element x = 0; x < s.order(); ++x) {
          if (s(x, e) != e) {
            return "idempotent " + show(s, e) + " is not a right zero: "
                   + show_product(s, x, e);
          }
        }
      }
      return std::nullopt;
    }

    Reason check_li(FiniteSemigroup const& s) {
      for (Element e : idempotents(s)) {
        for (Element x = 0; x < s.order(); ++x) {
          if (s(s(e, x), e) != e) {
            return "e*" + show(s, x) + "*e != e for e = " + show(s, e);
          }
        }
      }
      return std::nullopt;
    }

    Reason check_ecom(FiniteSemigroup const& s) {
      auto const e = idempotents(s);
      for (Element x : e) {
        for (Element y : e) {
          if (s(x, y) != s(y, x)) {
            return "idempotents do not commute: " + show_product(s, x, y)
                   + " but " + show_product(s, y, x);
          }
        }
      }
      return std::nullopt;
    }

    Reason check_rs(FiniteSemigroup const& s) {
      auto const g = green(s);
      for (Element x : g.regular) {
        for (Element y : g.regular) {
          if (!g.is_regular(s(x, y))) {
            return "product of regular elements is not regular: "
                   + show_product(s, x, y);
          }
        }
      }
      return std::nullopt;
    }

    Reason check_dg(FiniteSemigroup const& s) {
      auto const g = green(s);
      for (auto const& cls : regular_j_classes(g)) {
        for (Element x : cls) {
          if (g.h_class_of[x] != g.h_class_of[cls.front()]) {
            return "regular J-class " + show_class(s, cls)
                   + " has more than one H-class";
          }
        }
      }
      return std::nullopt;
    }

    Reason check_g(FiniteSemigroup const& s) {
      auto const one = s.identity();
      if (!one) {
        return std::string("no identity");
      }
      for (Element x = 0; x < s.order(); ++x) {
        bool invertible = false;
        for (Element y = 0; y < s.order() && !invertible; ++y) {
          invertible = s(x, y) == *one && s(y, x) == *one;
        }
        if (!invertible) {
          return show(s, x) + " is not invertible";
        }
      }
      return std::nullopt;
    }

    Reason check_ab(FiniteSemigroup const& s) {
      if (auto r = check_g(s)) {
        return r;
      }
      for (Element x = 0; x < s.order(); ++x) {
        for (Element y = 0; y < x; ++y) {
          if (s(x, y) != s(y, x)) {
            return "not commutative: " + show_product(s, x, y);
          }
        }
      }
      return std::nullopt;
    }

    std::vector<Pseudoidentity> parse_basis(
        std::initializer_list<char const*> texts) {
      std::vector<Pseudoidentity> out;
      for (char const* t : texts) {
        out.push_back(parse_pseudoidentity(t));
      }
      return out;
    }

    Reason first_failure(FiniteSemigroup const&             s,
                         std::vector<Pseudoidentity> const& basis) {
      for (auto const& p : basis) {
        if (!satisfies(s, p)) {
          return "fails " + to_string(p);
        }
      }
      return std::nullopt;
    }

    // Verdict by whichever checker exists, structural first.
    Reason decide(FiniteSemigroup const& s, VarietyPredicate const& v) {
      if (v.structural) {
        return v.structural(s);
      }
      return first_failure(s, *v.basis);
    }

    std::vector<Pseudoidentity> ds_basis() {
      return parse_basis({"((xy)^w(yx)^w(xy)^w)^w = (xy)^w"});
    }

    VarietyPredicate base_variety(std::string const& name) {
      if (name == "Sl") {
        return {name, parse_basis({"xy = yx", "xx = x"}), check_sl};
      }
      if (name == "J") {
        return {name, parse_basis({"(xy)^w = (yx)^w", "x^(w+1) = x^w"}),
                check_j};
      }
      if (name == "DS") {
        return {name, ds_basis(), check_ds};
      }
      if (name == "N") {
        return {name, parse_basis({"x^w y = x^w", "y x^w = x^w"}), check_n};
      }
      if (name == "K") {
        return {name, parse_basis({"x^w y = x^w"}), check_k};
      }
      if (name == "D") {
        return {name, parse_basis({"y x^w = x^w"}), check_d};
      }
      if (name == "LI") {
        return {name, parse_basis({"x^w y x^w = x^w"}), check_li};
      }
      if (name == "ECom") {
        return {name, parse_basis({"x^w y^w = y^w x^w"}), check_ecom};
      }
      if (name == "RS") {
        return {name, std::nullopt, check_rs};
      }
      if (name == "DSRS") {
        auto basis = ds_basis();
        basis.push_back(parse_pseudoidentity(
            "x^(w+1) y^(w+1) = (x^(w+1) y^(w+1))^(w+1)"));
        return {name, std::move(basis), [](FiniteSemigroup const& s) {
                  if (auto r = check_ds(s)) {
                    return r;
                  }
                  return check_rs(s);
                }};
      }
      if (name == "DG") {
        return {name, parse_basis({"(xy)^w = (yx)^w"}), check_dg};
      }
      if (name == "G") {
        return {name, std::nullopt, check_g};
      }
      if (name == "Ab") {
        return {name, std::nullopt, check_ab};
      }
      throw UnknownVariety(name);
    }

  }  // namespace

  std::vector<std::string> registered_varieties() {
    return {"Sl", "J",    "DS", "N",  "K", "D",  "LI",
            "ECom", "RS", "DSRS", "DG", "G", "Ab"};
  }

  VarietyPredicate variety(std::string const& name) {
    for (std::string const op : {"DV", "LV"}) {
      if (name.size() > 4 && name.compare(0, 3, op + "(") == 0
          && name.back() == ')') {
        auto const inner = variety(name.substr(3, name.size() - 4));
        if (op == "DV") {
          return {name, std::nullopt,
                  [inner](FiniteSemigroup const& s) -> Reason {
                    auto const g = green(s);
                    for (auto const& cls : regular_j_classes(g)) {
                      if (auto r = closed(s, cls, g)) {
                        return r;
                      }
                      auto const sub = generated_subsemigroup(s, cls);
                      if (auto r = decide(sub.semigroup, inner)) {
                        return "regular J-class " + show_class(s, cls)
                               + " is not in " + inner.name + ": " + *r;
                      }
                    }
                    return std::nullopt;
                  }};
        }
        return {name, std::nullopt,
                [inner](FiniteSemigroup const& s) -> Reason {
                  for (Element e : idempotents(s)) {
                    auto const local = local_subsemigroup(s, e);
                    if (auto r = decide(local.semigroup, inner)) {
                      return "local monoid at " + show(s, e) + " is not in "
                             + inner.name + ": " + *r;
                    }
                  }
                  return std::nullopt;
                }};
      }
    }
    return base_variety(name);
  }

  MembershipReport variety_member(FiniteSemigroup const&  s,
                                  VarietyPredicate const& v,
                                  Method                  method) {
    bool const want_basis = method != Method::structural;
    bool const want_struct = method != Method::basis;
    if (want_basis && !v.basis) {
      throw MissingChecker("variety " + v.name + " has no basis");
    }
    if (want_struct && !v.structural) {
      throw MissingChecker("variety " + v.name + " has no structural check");
    }

    MembershipReport report;
    report.variety = v.name;
    report.method  = method;

    std::optional<bool> basis_verdict;
    if (want_basis) {
      basis_verdict = true;
      for (auto const& p : *v.basis) {
        auto sat = satisfies(s, p);
        if (!sat) {
          basis_verdict          = false;
          report.member          = false;
          report.reason          = "fails " + to_string(p);
          report.failed_identity = p;
          report.counterexample  = sat.counterexample;
          break;
        }
      }
    }
    if (want_struct) {
      auto const r = v.structural(s);
      if (basis_verdict && *basis_verdict != !r) {
        throw PredicateDisagreement(v.name, s.name(), *basis_verdict);
      }
      if (r) {
        report.member = false;
        if (!report.reason) {
          report.reason = r;
        }
      }
    }
    return report;
  }

  bool is_member(FiniteSemigroup const& s, std::string const& variety_name) {
    return !decide(s, variety(variety_name));
  }

}  // namespace semilab
