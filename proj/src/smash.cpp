#include "hopflift/present.hpp"
#include "hopflift/ydmod.hpp"

namespace hopflift {

namespace {

// Re-expresses a polynomial of `src` through a letter map into the target.
Poly relabel(const Poly& p, const std::vector<char>& map) {
  Poly out;
  for (const auto& [w, c] : p.terms) {
    Word v;
    for (char ch : w) v += map[static_cast<unsigned char>(ch)];
    out.add(v, c);
  }
  return out;
}

}  // namespace

Presentation tensor_algebra_quotient(const std::vector<std::string>& module_gens,
                                     const std::vector<Poly>& relations) {
  PresentationBuilder b({}, module_gens);
  for (const auto& r : relations) b.equation(r, "quadratic relation");
  return b.build();
}

Presentation smash_product(const Presentation& r, const Presentation& h_pres, const HopfData& h,
                           const YDModule& v) {
  if (r.num_letters() != r.num_module_letters())
    throw PresentationError("smash_product: R must have module letters only");
  if (r.num_letters() != v.dim()) throw PresentationError("smash_product: R and V differ in dimension");
  if (h_pres.num_module_letters() != 0) throw PresentationError("smash_product: H presentation has module letters");

  std::vector<std::string> group(h_pres.names().begin(), h_pres.names().end());
  std::vector<std::string> module(r.names().begin(), r.names().end());
  PresentationBuilder b(group, module);
  const Presentation& s = b.scratch();

  std::vector<char> rmap(r.num_letters());
  for (std::size_t i = 0; i < r.num_letters(); ++i) rmap[i] = *s.letter(r.names()[i]);
  std::vector<char> hmap(h_pres.num_letters());
  for (std::size_t i = 0; i < h_pres.num_letters(); ++i) hmap[i] = *s.letter(h_pres.names()[i]);

  for (const auto& rule : r.rules()) b.equation(relabel(Poly::word(rule.lhs) - rule.rhs, rmap), "R relation");
  for (const auto& rule : h_pres.rules())
    b.equation(relabel(Poly::word(rule.lhs) - rule.rhs, hmap), "H relation");

  // Basis element of h for each group letter, and the word of each basis element.
  std::vector<Word> basis_word(h.dim());
  std::vector<std::size_t> letter_basis(h_pres.num_letters(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t g : h.spelling()[i]) {
      auto l = s.letter(h.generators()[g]);
      if (!l) throw PresentationError("smash_product: generator " + h.generators()[g] + " not in H presentation");
      basis_word[i] += *l;
    }
    if (h.spelling()[i].size() == 1) letter_basis[*h_pres.letter(h.generators()[h.spelling()[i][0]])] = i;
  }

  const std::size_t d = v.dim();
  for (std::size_t gl = 0; gl < h_pres.num_letters(); ++gl) {
    std::size_t hb = letter_basis[gl];
    if (hb == h.dim()) throw PresentationError("smash_product: letter " + h_pres.names()[gl] + " is not a basis element");
    for (std::size_t i = 0; i < d; ++i) {
      // h x_i = sum (h1 . x_i) h2
      Poly rhs;
      for (const auto& [jk, c] : h.coproduct_terms(hb)) {
        std::size_t j = jk / h.dim();
        std::size_t k = jk % h.dim();
        const Mat& act = v.action(j);
        for (std::size_t l = 0; l < d; ++l) {
          const Scalar& a = act(static_cast<Index>(l), static_cast<Index>(i));
          if (!a.is_zero()) rhs.add(Word(1, rmap[l]) + basis_word[k], c * a);
        }
      }
      b.equation(Poly::word(Word(1, hmap[gl]) + Word(1, rmap[i])) - rhs, "action relation");
    }
  }

  for (std::size_t gl = 0; gl < h_pres.num_letters(); ++gl) {
    char l = static_cast<char>(gl);
    if (auto it = h_pres.coproducts().find(l); it != h_pres.coproducts().end()) {
      TensorPoly t(2);
      for (const auto& [ws, c] : it->second.terms) t.add({relabel(Poly::word(ws[0]), hmap).terms.begin()->first,
                                                          relabel(Poly::word(ws[1]), hmap).terms.begin()->first},
                                                         c);
      b.coproduct(h_pres.names()[gl], t);
    }
    if (auto it = h_pres.counits().find(l); it != h_pres.counits().end()) b.counit(h_pres.names()[gl], it->second);
    if (auto it = h_pres.antipodes().find(l); it != h_pres.antipodes().end())
      b.antipode(h_pres.names()[gl], relabel(it->second, hmap));
  }

  // Delta(x) = x (x) 1 + x(-1) (x) x(0)
  const Mat& co = v.coaction();
  for (std::size_t i = 0; i < d; ++i) {
    TensorPoly t(2);
    t.add({Word(1, rmap[i]), Word{}}, Scalar(1));
    for (Index row = 0; row < co.rows(); ++row) {
      const Scalar& c = co(row, static_cast<Index>(i));
      if (c.is_zero()) continue;
      std::size_t g = static_cast<std::size_t>(row) / d;
      std::size_t l = static_cast<std::size_t>(row) % d;
      t.add({basis_word[g], Word(1, rmap[l])}, c);
    }
    b.coproduct(r.names()[i], t);
    b.counit(r.names()[i], Scalar(0));
  }
  return b.build();
}

std::optional<std::string> compare_structure_constants(const Presentation& x, const Presentation& y) {
  if (x.names() != y.names()) return "generator names differ";
  const BasisResult bx = enumerate_basis(x);
  const BasisResult by = enumerate_basis(y);
  if (!bx.complete || !by.complete) return "basis enumeration hit the word bound";
  if (bx.words.size() != by.words.size())
    return "dimensions differ: " + std::to_string(bx.words.size()) + " vs " + std::to_string(by.words.size());
  for (std::size_t i = 0; i < bx.words.size(); ++i)
    if (x.str(bx.words[i]) != y.str(by.words[i]))
      return "basis word " + std::to_string(i) + ": " + x.str(bx.words[i]) + " vs " + y.str(by.words[i]);
  for (std::size_t g = 0; g < x.num_letters(); ++g) {
    const std::string& name = x.name(static_cast<char>(g));
    for (const Word& w : bx.words) {
      const std::string sx = x.str(x.normal_form(x.gen(name) * Poly::word(w)));
      const std::string sy = y.str(y.normal_form(y.gen(name) * Poly::word(w)));
      if (sx != sy) return name + " * " + x.str(w) + ": " + sx + " vs " + sy;
    }
  }
  return std::nullopt;
}

}  // namespace hopflift
