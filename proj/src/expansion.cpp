#include "semilab/expansion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "semilab/error.hpp"

namespace semilab {

  namespace {

    FiniteSemigroup ambient_of(LetterMorphism const& phi) {
      if (phi.mode() == MorphismMode::semigroup) {
        return adjoin_identity(phi.target()).semigroup;
      }
      if (!phi.target().identity()) {
        throw NotOnto("monoid mode needs a target with an identity");
      }
      return phi.target();
    }

    void normalize(std::vector<GoodFactClass>& classes) {
      std::sort(classes.begin(), classes.end());
      classes.erase(std::unique(classes.begin(), classes.end()),
                    classes.end());
    }

  }  // namespace

  SignatureAlgebra::SignatureAlgebra(LetterMorphism phi)
      : phi_(std::move(phi)),
        ambient_(ambient_of(phi_)),
        identity_(*ambient_.identity()),
        green_(green(ambient_)) {}

  // S^I keeps the indices of S, so letter images carry over unchanged
  Element SignatureAlgebra::letter_image(char letter) const {
    return phi_.image(letter);
  }

  Element SignatureAlgebra::evaluate(std::string const& word) const {
    Element x = identity_;
    for (char c : word) {
      x = ambient_(x, letter_image(c));
    }
    return x;
  }

  bool SignatureAlgebra::strict_r_step(Element left, char letter) const {
    return green_.strictly_below_r(ambient_(left, letter_image(letter)),
                                   left);
  }

  bool SignatureAlgebra::strict_l_step(char letter, Element right) const {
    return green_.strictly_below_l(ambient_(letter_image(letter), right),
                                   right);
  }

  std::vector<GoodFactClass>
  SignatureAlgebra::good_factorizations(std::string const& word) const {
    std::size_t const    n = word.size();
    std::vector<Element> prefix(n + 1, identity_), suffix(n + 1, identity_);
    for (std::size_t i = 0; i < n; ++i) {
      prefix[i + 1] = ambient_(prefix[i], letter_image(word[i]));
    }
    for (std::size_t i = n; i > 0; --i) {
      suffix[i - 1] = ambient_(letter_image(word[i - 1]), suffix[i]);
    }
    // word = word[0, i) word[i] word(i, n)
    std::vector<GoodFactClass> classes;
    for (std::size_t i = 0; i < n; ++i) {
      if (strict_r_step(prefix[i], word[i])
          && strict_l_step(word[i], suffix[i + 1])) {
        classes.push_back({prefix[i], word[i], suffix[i + 1]});
      }
    }
    normalize(classes);
    return classes;
  }

  Signature SignatureAlgebra::signature(std::string const& word) const {
    return {evaluate(word), good_factorizations(word)};
  }

  Signature SignatureAlgebra::product(Signature const& x,
                                      Signature const& y) const {
    Signature out{ambient_(x.image, y.image), {}};
    for (auto const& c : x.classes) {
      Element const right = ambient_(c.right, y.image);
      if (strict_l_step(c.letter, right)) {
        out.classes.push_back({c.left, c.letter, right});
      }
    }
    for (auto const& c : y.classes) {
      Element const left = ambient_(x.image, c.left);
      if (strict_r_step(left, c.letter)) {
        out.classes.push_back({left, c.letter, c.right});
      }
    }
    normalize(out.classes);
    return out;
  }

  std::string SignatureAlgebra::describe(Signature const& s) const {
    std::string out = "(" + ambient_.element_name(s.image) + ";";
    for (auto const& c : s.classes) {
      out += " (" + ambient_.element_name(c.left) + "," + c.letter + ","
             + ambient_.element_name(c.right) + ")";
    }
    return out + ")";
  }

  std::vector<GoodFactClass> good_factorizations(std::string const&    word,
                                                 LetterMorphism const& phi) {
    return SignatureAlgebra(phi).good_factorizations(word);
  }

  Signature signature(std::string const& word, LetterMorphism const& phi) {
    return SignatureAlgebra(phi).signature(word);
  }

  Signature signature_product(Signature const&      x,
                              Signature const&      y,
                              LetterMorphism const& phi) {
    return SignatureAlgebra(phi).product(x, y);
  }

  ExpansionResult expand(LetterMorphism const& phi, std::size_t cap) {
    if (!phi.is_onto()) {
      throw NotOnto("the letter images do not generate the target");
    }
    SignatureAlgebra const   algebra(phi);
    auto const&              alphabet = phi.alphabet();
    std::vector<Signature>   sigs;
    std::vector<std::string> words;
    std::map<Signature, Element> index;

    auto const add = [&](Signature s, std::string w) {
      auto [it, fresh] = index.emplace(std::move(s),
                                       static_cast<Element>(sigs.size()));
      if (fresh) {
        if (sigs.size() == cap) {
          throw SignatureExplosion(cap);
        }
        sigs.push_back(it->first);
        words.push_back(std::move(w));
      }
      return it->second;
    };

    bool const monoid = phi.mode() == MorphismMode::monoid;
    if (monoid) {
      add(algebra.identity_signature(), "");
    }
    std::vector<Signature> letter_sigs;
    std::vector<Element>   letter_elements;
    for (char c : alphabet) {
      letter_sigs.push_back(algebra.signature(std::string(1, c)));
      letter_elements.push_back(add(letter_sigs.back(), std::string(1, c)));
    }
    for (std::size_t head = 0; head < sigs.size(); ++head) {
      for (std::size_t i = 0; i < alphabet.size(); ++i) {
        add(algebra.product(sigs[head], letter_sigs[i]),
            words[head] + alphabet[i]);
      }
    }

    std::size_t const    n = sigs.size();
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto it = index.find(algebra.product(sigs[x], sigs[y]));
        if (it == index.end()) {
          throw std::logic_error("signature set is not closed under product");
        }
        table[x * n + y] = it->second;
      }
    }
    for (auto& w : words) {
      if (w.empty()) {
        w = "1";
      }
    }
    std::vector<Element> projection(n);
    for (std::size_t x = 0; x < n; ++x) {
      projection[x] = sigs[x].image;
    }
    std::string const prefix = monoid ? "M_phi(" : "S_phi(";
    FiniteSemigroup   expanded(n, std::move(table), std::move(words),
                               prefix + phi.target().name() + ")");
    LetterMorphism    phi_bd(alphabet, expanded, letter_elements, phi.mode());
    return {phi.target(), std::move(expanded), std::move(phi_bd),
            std::move(projection), std::move(sigs)};
  }

  RegularCoreReport regular_core_check(ExpansionResult const& r) {
    RegularCoreReport report;
    report.expanded_core = regular_core(r.expanded).inclusion;
    report.target_core   = regular_core(r.target).inclusion;
    std::vector<Element> hit(r.target.order(), 0);
    std::vector<Element> source(r.target.order(), 0);
    for (Element x : report.expanded_core) {
      Element const p = r.projection[x];
      if (hit[p] && !report.collision) {
        report.collision = std::pair{source[p], x};
      }
      hit[p]    = 1;
      source[p] = x;
    }
    std::vector<unsigned char> in_core(r.target.order(), 0);
    for (Element t : report.target_core) {
      in_core[t] = 1;
      if (!hit[t] && !report.missed) {
        report.missed = t;
      }
    }
    for (Element t = 0; t < r.target.order(); ++t) {
      if (hit[t] && !in_core[t] && !report.stray) {
        report.stray = source[t];
      }
    }
    report.passed = !report.collision && !report.missed && !report.stray;
    return report;
  }

  FiniteSemigroup const& ExpansionTower::level(std::size_t n) const {
    if (n == 0) {
      return base.target();
    }
    return levels.at(n - 1).expanded;
  }

  std::vector<std::size_t> ExpansionTower::orders() const {
    std::vector<std::size_t> out = {base.target().order()};
    for (auto const& l : levels) {
      out.push_back(l.expanded.order());
    }
    return out;
  }

  ExpansionTower expansion_tower(LetterMorphism const& phi,
                                 std::size_t           max_iter,
                                 std::size_t           cap) {
    if (max_iter == 0) {
      throw InputError("a tower needs at least one iteration");
    }
    ExpansionTower tower{phi, {}, std::nullopt};
    for (std::size_t n = 1; n <= max_iter; ++n) {
      LetterMorphism const& current
          = n == 1 ? phi : tower.levels.back().phi_bd;
      tower.levels.push_back(expand(current, cap));
      // projection is onto, so equal orders make it a bijection
      if (!tower.stabilized_at
          && tower.levels.back().expanded.order() == current.target().order()) {
        tower.stabilized_at = n;
      }
    }
    return tower;
  }

}  // namespace semilab
