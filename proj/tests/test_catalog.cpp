#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopflift/catalog.hpp"
#include "hopflift/linalg.hpp"
#include "hopflift/nichols.hpp"

using namespace hopflift;
using namespace hopflift::catalog;

TEST_CASE("H relations") {
  const auto h = H();
  CHECK(h->dim() == 16);
  auto e = [](const char* s) { return h_element(s); };
  CHECK(h->multiply(e("d"), e("d")) == e("a"));
  CHECK(h->multiply(e("d"), e("b")) == h->multiply(e("c"), e("d")));
  CHECK(h->multiply(e("d"), e("c")) == h->multiply(e("b"), e("d")));
  CHECK(h->multiply(e("d"), e("a")) == h->multiply(e("a"), e("d")));
}

TEST_CASE("automorphism table") {
  CHECK(tau(1) == Mat::Identity(16, 16));
  const Mat t17 = tau(17);
  CHECK(matmul(matmul(t17, t17), matmul(t17, t17)) == tau(1));
  CHECK(matmul(t17, t17) != tau(1));
  for (int k = 1; k <= 32; ++k) CHECK(check_hopf_morphism(*H(), *H(), tau(k)));
  const AutReport r = automorphism_group_check();
  CHECK(r.ok());
  CHECK(r.order == 32);
  CHECK_THROWS_AS(tau_images(33), CatalogError);
}

TEST_CASE("coaction of M15") {
  const YDModule m = M(15);
  REQUIRE(m.dim() == 2);
  const Vec first = h_element("(1/2)*a*(1+b*c)*d");
  const Vec second = h_element("(1/2)*a*(1-b*c)*d");
  for (Index g = 0; g < 16; ++g) {
    CHECK(m.coaction()(2 * g, 0) == first(g));
    CHECK(m.coaction()(2 * g + 1, 0) == second(g));
  }
}

TEST_CASE("coaction of M1") {
  const YDModule m = M(1);
  for (Index g = 0; g < 16; ++g) {
    CHECK(m.coaction()(2 * g, 0) == Scalar(g == 4 ? 1 : 0));  // b (x) v1
    CHECK(m.coaction()(2 * g + 1, 1) == Scalar(g == 2 ? 1 : 0));  // c (x) v2
  }
}

TEST_CASE("Omega") {
  CHECK_THROWS_AS(omega(1, std::vector<int>(8, 0)), CatalogError);
  CHECK(omega(1, {1, 0, 0, 0, 0, 0, 0, 0}).dim() == 1);
  CHECK(omega(14).dim() == 4);
  CHECK(omega_generator_names(2, {1, 1, 1, 1}) == std::vector<std::string>{"p1", "p2", "E1", "F1", "G1", "H1"});
  CHECK_THROWS_AS(lifting("U1", std::vector<int>(8, 0), zero_params(family("U1"), std::vector<int>(8, 1))),
                  CatalogError);
}

TEST_CASE("paired sums share graded dimensions") {
  for (const auto& [i, j] : same_series_pairs()) {
    CAPTURE(i);
    CAPTURE(j);
    NicholsCaps caps;
    caps.max_tensor_dim = 300000;  // six-dimensional sums terminate in degree 7
    CHECK(graded_dims(omega(i), 8, caps).dims == graded_dims(omega(j), 8, caps).dims);
  }
}

TEST_CASE("involutive cases") {
  for (const auto& [v, w] : involutive_cases()) {
    CAPTURE(v);
    CAPTURE(w);
    CHECK(is_involutive_pair(simple(v), simple(w)));
  }
  for (int i = 1; i <= 8; ++i)
    for (int j = 13; j <= 20; ++j) CHECK_FALSE(is_involutive_pair(V(i), M(j)));
}

TEST_CASE("families at zero and sample parameters") {
  for (const auto& f : families()) {
    CAPTURE(f.name);
    const auto n = f.n_count ? default_n(f) : std::vector<int>{};
    for (const ParamSet& p : {zero_params(f, n), sample_params(f, n)}) {
      const Presentation u = lifting(f.name, n, p);
      CHECK(confluence_check(u).confluent());
      const auto b = enumerate_basis(u);
      CHECK(b.complete);
      CHECK(b.words.size() == expected_dimension(f.name, n));
    }
  }
}
