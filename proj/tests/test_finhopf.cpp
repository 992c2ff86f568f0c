#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopflift/catalog.hpp"
#include "hopflift/finhopf.hpp"
#include "hopflift/linalg.hpp"

using namespace hopflift;
using catalog::H;

namespace {

// x (x) y as a vector on e_j (x) e_k.
Vec outer(const Vec& x, const Vec& y) {
  const Index n = x.size();
  Vec out = Vec::Zero(n * n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) out(j * n + k) = x(j) * y(k);
  return out;
}

Vec basis_vec(Index n, Index i) {
  Vec v = Vec::Zero(n);
  v(i) = Scalar(1);
  return v;
}

}  // namespace

TEST_CASE("catalog H satisfies every axiom group") {
  const AxiomReport r = verify_axioms(*catalog::H());
  CHECK(r.checks.size() == 6);
  CHECK(r.ok());
  CHECK(catalog::H()->dim() == 16);
}

TEST_CASE("group algebra of Z2") {
  const HopfData g = cyclic_group_algebra(2);
  CHECK(verify_axioms(g).ok());
  CHECK(group_likes(g).elements.size() == 2);
  // S(g) = g^-1 = g
  CHECK(g.apply_antipode(basis_vec(2, 1)) == basis_vec(2, 1));
}

TEST_CASE("d squared = 1 breaks the axioms with a witness") {
  bool found = false;
  for (const auto& m : catalog::h_relation_mutations()) {
    if (m.label.find("d*d") == std::string::npos && m.label.find("d^2") == std::string::npos) continue;
    found = true;
    const AxiomReport r = verify_axioms(catalog::hopf_from_dsl(m.dsl));
    CHECK_FALSE(r.ok());
    for (const auto& c : r.checks)
      if (!c.passed) CHECK_FALSE(c.witness.empty());
  }
  CHECK(found);
}

TEST_CASE("hand expansion of Delta(d) squared differs from Delta(1)") {
  // With d^2 = 1 the coproduct of d^2 would be 1 (x) 1; the product of the
  // defining Delta(d) with itself gives Delta(a) = a (x) a instead.
  const auto h = catalog::H();
  const Vec d = catalog::h_element("d");
  const Vec dd = h->coproduct(h->multiply(d, d));
  const Vec a = catalog::h_element("a");
  CHECK(dd == outer(a, a));
  const Vec one = catalog::h_element("1");
  CHECK(dd != outer(one, one));
}

TEST_CASE("group-likes of H are the monomials in a, b, c") {
  const auto h = catalog::H();
  const GroupLikes g = group_likes(*h);
  CHECK(g.conclusive);
  REQUIRE(g.elements.size() == 8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const Vec e = basis_vec(16, 8 * i + 4 * j + 2 * k);
        CHECK(h->coproduct(e) == outer(e, e));
        bool listed = false;
        for (const auto& x : g.elements) listed = listed || x == e;
        CHECK(listed);
      }
}

TEST_CASE("group-likes of the dual are the characters of H") {
  // brute force: generator values in {1, -1, x, -x}, extended to the monomial
  // basis and tested for multiplicativity against H's structure constants
  const auto h = H();
  const Scalar vals[4] = {Scalar(1), Scalar(-1), Scalar::xi(), -Scalar::xi()};
  std::size_t characters = 0;
  for (const Scalar& ca : vals)
    for (const Scalar& cb : vals)
      for (const Scalar& cc : vals)
        for (const Scalar& cd : vals) {
          std::vector<Scalar> chi(16);
          for (int i = 0; i < 16; ++i)
            chi[static_cast<std::size_t>(i)] = pow(ca, (i >> 3) & 1) * pow(cb, (i >> 2) & 1) * pow(cc, (i >> 1) & 1) * pow(cd, i & 1);
          bool mult = true;
          for (std::size_t i = 0; i < 16 && mult; ++i)
            for (std::size_t j = 0; j < 16 && mult; ++j) {
              Scalar rhs(0);
              for (std::size_t k = 0; k < 16; ++k) rhs += h->mul(i, j, k) * chi[k];
              mult = chi[i] * chi[j] == rhs;
            }
          characters += mult;
        }
  const GroupLikes g = group_likes(*catalog::H_dual());
  CHECK(g.conclusive);
  CHECK(characters == 8);
  CHECK(g.elements.size() == characters);
  const auto hd = catalog::H_dual();
  for (const auto& x : g.elements) CHECK(hd->coproduct(x) == outer(x, x));
}

TEST_CASE("skew-primitives") {
  const auto h = catalog::H();
  const Vec one = catalog::h_element("1");
  const auto p = skew_primitives(*h, one, catalog::h_element("b*c"));
  REQUIRE(p.size() == 1);
  const Vec expect = catalog::h_element("1 - b*c");
  // p[0] is a nonzero multiple of 1 - bc
  Index pivot = 0;
  while (p[0](pivot).is_zero()) ++pivot;
  CHECK(p[0] * (expect(pivot) / p[0](pivot)) == expect);
  CHECK(skew_primitives(*h, one, one).empty());
  const Vec g = catalog::h_element("a*b");
  CHECK(skew_primitives(*h, g, g).empty());
}

TEST_CASE("morphism checks") {
  const auto h = catalog::H();
  CHECK(check_hopf_morphism(*h, *h, Mat::Identity(16, 16)));
  CHECK(check_hopf_morphism(*h, *h, catalog::tau(17)));
  CHECK_FALSE(check_hopf_morphism(*h, *h, catalog::algebra_map({"a", "b", "c", "b*d"})));
}

TEST_CASE("duality") {
  const auto h = catalog::H();
  const HopfData hd = dualize(*h);
  CHECK(verify_axioms(hd).ok());
  CHECK(dualize(hd) == *h);
  const HopfData f = dualize(cyclic_group_algebra(2));
  CHECK(verify_axioms(f).ok());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        CHECK(f.mul(i, j, k) == f.mul(j, i, k));
        CHECK(f.comul(i, j, k) == f.comul(i, k, j));
      }
}
