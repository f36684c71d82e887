#include "semilab/term.hpp"

#include <bit>
#include <cctype>

#include "semilab/error.hpp"

namespace semilab {

  LetterSet LetterSet::of(std::string_view letters) {
    LetterSet set;
    for (char c : letters) {
      set.insert(c);
    }
    return set;
  }

  LetterSet LetterSet::single(char c) {
    LetterSet set;
    set.insert(c);
    return set;
  }

  void LetterSet::insert(char c) {
    if (!is_letter(c)) {
      throw InputError(std::string("'") + c + "' is not a letter");
    }
    bits_ |= std::uint64_t{1} << bit(c);
  }

  std::size_t LetterSet::size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }

  std::string LetterSet::letters() const {
    std::string out;
    for (char c = 'a'; c <= 'z'; ++c) {
      if (contains(c)) {
        out += c;
      }
    }
    for (char c = 'A'; c <= 'Z'; ++c) {
      if (contains(c)) {
        out += c;
      }
    }
    return out;
  }

  OmegaTerm OmegaTerm::letter(char c) {
    if (!LetterSet::is_letter(c)) {
      throw InputError(std::string("'") + c + "' is not a letter");
    }
    OmegaTerm t;
    t.kind_   = Kind::letter;
    t.symbol_ = c;
    return t;
  }

  OmegaTerm OmegaTerm::concat(std::vector<OmegaTerm> factors) {
    if (factors.empty()) {
      throw InputError("empty concatenation");
    }
    std::vector<OmegaTerm> flat;
    for (auto& f : factors) {
      if (f.is_concat()) {
        for (auto& g : f.children_) {
          flat.push_back(std::move(g));
        }
      } else {
        flat.push_back(std::move(f));
      }
    }
    if (flat.size() == 1) {
      return std::move(flat.front());
    }
    OmegaTerm t;
    t.kind_     = Kind::concat;
    t.children_ = std::move(flat);
    return t;
  }

  OmegaTerm OmegaTerm::power(OmegaTerm base, long long shift) {
    OmegaTerm t;
    t.kind_  = Kind::power;
    t.shift_ = shift;
    t.children_.push_back(std::move(base));
    return t;
  }

  std::vector<OmegaTerm> OmegaTerm::factors() const {
    if (is_concat()) {
      return children_;
    }
    return {*this};
  }

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      OmegaTerm parse_all() {
        OmegaTerm t = term();
        skip();
        if (pos_ != text_.size()) {
          throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_]
                                      + "'");
        }
        return t;
      }

      // term up to (not including) '=' or end; used for pseudoidentities
      OmegaTerm parse_until(char stop) {
        OmegaTerm t = term();
        skip();
        if (pos_ == text_.size() || text_[pos_] != stop) {
          throw SyntaxError(pos_, std::string("expected '") + stop + "'");
        }
        ++pos_;
        return t;
      }

      std::size_t position() const noexcept {
        return pos_;
      }

     private:
      void skip() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool at_atom() {
        skip();
        return pos_ < text_.size()
               && (LetterSet::is_letter(text_[pos_]) || text_[pos_] == '(');
      }

      OmegaTerm term() {
        std::vector<OmegaTerm> factors;
        while (at_atom()) {
          factors.push_back(factor());
        }
        if (factors.empty()) {
          throw SyntaxError(pos_, pos_ < text_.size()
                                      ? std::string("unexpected '")
                                            + text_[pos_] + "'"
                                      : std::string("expected a term"));
        }
        return OmegaTerm::concat(std::move(factors));
      }

      OmegaTerm factor() {
        OmegaTerm a = atom();
        skip();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          return OmegaTerm::power(std::move(a), exponent());
        }
        return a;
      }

      OmegaTerm atom() {
        skip();
        if (text_[pos_] == '(') {
          ++pos_;
          OmegaTerm t = term();
          expect(')');
          return t;
        }
        return OmegaTerm::letter(text_[pos_++]);
      }

      long long exponent() {
        skip();
        if (pos_ < text_.size() && text_[pos_] == 'w') {
          ++pos_;
          return 0;
        }
        expect('(');
        expect('w');
        skip();
        if (pos_ == text_.size()
            || (text_[pos_] != '+' && text_[pos_] != '-')) {
          throw SyntaxError(pos_, "expected '+' or '-' after w");
        }
        bool const negative = text_[pos_++] == '-';
        skip();
        std::size_t const start = pos_;
        long long         value = 0;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          value = value * 10 + (text_[pos_++] - '0');
          if (value > 1'000'000'000) {
            throw SyntaxError(start, "exponent too large");
          }
        }
        if (pos_ == start) {
          throw SyntaxError(pos_, "expected an integer");
        }
        expect(')');
        return negative ? -value : value;
      }

      void expect(char c) {
        skip();
        if (pos_ == text_.size() || text_[pos_] != c) {
          throw SyntaxError(pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  OmegaTerm parse_term(std::string_view text) {
    return Parser(text).parse_all();
  }

  std::string to_string(OmegaTerm const& t) {
    switch (t.kind()) {
      case OmegaTerm::Kind::letter:
        return std::string(1, t.symbol());
      case OmegaTerm::Kind::concat: {
        std::string out;
        for (auto const& f : t.children()) {
          out += to_string(f);
        }
        return out;
      }
      case OmegaTerm::Kind::power: {
        std::string out = t.base().is_letter()
                              ? to_string(t.base())
                              : "(" + to_string(t.base()) + ")";
        if (t.shift() == 0) {
          return out + "^w";
        }
        return out + "^(w" + (t.shift() > 0 ? "+" : "-")
               + std::to_string(t.shift() > 0 ? t.shift() : -t.shift())
               + ")";
      }
    }
    return {};
  }

  LetterSet content(OmegaTerm const& t) {
    if (t.is_letter()) {
      return LetterSet::single(t.symbol());
    }
    LetterSet c;
    for (auto const& f : t.children()) {
      c = c | content(f);
    }
    return c;
  }

  void Assignment::set(char letter, Element value) {
    bound_.insert(letter);
    values_[static_cast<unsigned char>(letter)] = value;
  }

  Element Assignment::operator[](char letter) const {
    if (!bound_.contains(letter)) {
      throw UnboundLetter(letter);
    }
    return values_[static_cast<unsigned char>(letter)];
  }

  Element eval_term(OmegaTerm const&       t,
                    FiniteSemigroup const& s,
                    Assignment const&      assignment) {
    switch (t.kind()) {
      case OmegaTerm::Kind::letter: {
        Element const x = assignment[t.symbol()];
        if (x >= s.order()) {
          throw IndexOutOfRange(x, 0, "assigned value is not an element");
        }
        return x;
      }
      case OmegaTerm::Kind::concat: {
        auto const& fs = t.children();
        Element     x  = eval_term(fs.front(), s, assignment);
        for (std::size_t i = 1; i < fs.size(); ++i) {
          x = s(x, eval_term(fs[i], s, assignment));
        }
        return x;
      }
      case OmegaTerm::Kind::power:
        return s.omega_power(eval_term(t.base(), s, assignment), t.shift());
    }
    return 0;
  }

  Pseudoidentity parse_pseudoidentity(std::string_view text) {
    Parser    p(text);
    OmegaTerm lhs = p.parse_until('=');
    auto const offset = p.position();
    try {
      return {std::move(lhs), parse_term(text.substr(offset))};
    } catch (SyntaxError const& e) {
      throw SyntaxError(offset + e.position, "in right-hand side");
    }
  }

  std::string to_string(Pseudoidentity const& p) {
    return to_string(p.lhs) + " = " + to_string(p.rhs);
  }

  Satisfaction satisfies(FiniteSemigroup const& s, Pseudoidentity const& p) {
    std::string const    vars = p.variables().letters();
    std::vector<Element> value(vars.size(), 0);
    Assignment           a;
    for (char v : vars) {
      a.set(v, 0);
    }
    while (true) {
      if (eval_term(p.lhs, s, a) != eval_term(p.rhs, s, a)) {
        return {false, a};
      }
      std::size_t i = vars.size();
      while (i > 0 && value[i - 1] + 1 == s.order()) {
        value[i - 1] = 0;
        a.set(vars[i - 1], 0);
        --i;
      }
      if (i == 0) {
        return {true, std::nullopt};
      }
      ++value[i - 1];
      a.set(vars[i - 1], value[i - 1]);
    }
  }

}  // namespace semilab
