#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hopflift/catalog.hpp"
#include "hopflift/linalg.hpp"
#include "hopflift/nichols.hpp"

using namespace hopflift;
using catalog::M;
using catalog::V;

namespace {

Mat ident(std::size_t n) { return Mat::Identity(static_cast<Index>(n), static_cast<Index>(n)); }

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// c acting on tensor slots (k, k+1), 1-based k.
Mat slot(const BraidedSpace& v, std::size_t n, std::size_t k) {
  return kron(kron(ident(ipow(v.dim, k - 1)), v.braiding), ident(ipow(v.dim, n - k - 1)));
}

// S_n = (S_{n-1} (x) id)(1 + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1)
Mat symmetrizer_oracle(const BraidedSpace& v, std::size_t n) {
  if (n <= 1) return ident(ipow(v.dim, n));
  Mat tail = ident(ipow(v.dim, n));
  Mat run = ident(ipow(v.dim, n));
  for (std::size_t k = n - 1; k >= 1; --k) {
    run = matmul(run, slot(v, n, k));
    tail += run;
  }
  return matmul(kron(symmetrizer_oracle(v, n - 1), ident(v.dim)), tail);
}

}  // namespace

TEST_CASE("low degrees of the symmetrizer") {
  const BraidedSpace m1 = BraidedSpace::of(M(1));
  CHECK(symmetrizer(m1, 0) == ident(1));
  CHECK(symmetrizer(m1, 2) == Mat(ident(4) + m1.braiding));
  CHECK(symmetrizer(BraidedSpace::of(V(1)), 2) == Mat::Zero(1, 1));
}

TEST_CASE("symmetrizer against the recursive oracle") {
  for (const char* name : {"M1", "M8", "M13", "M17"}) {
    CAPTURE(name);
    const BraidedSpace v = BraidedSpace::of(catalog::simple(name));
    for (std::size_t n = 2; n <= 4; ++n) CHECK(symmetrizer(v, n) == symmetrizer_oracle(v, n));
  }
}

TEST_CASE("graded dimensions of the simple modules") {
  for (int i = 1; i <= 8; ++i) {
    const GradedDims g = graded_dims(V(i), 8);
    CHECK(g.dims == std::vector<std::size_t>{1, 1, 0});
    CHECK(g.total() == 2);
  }
  for (int j = 1; j <= 20; ++j) {
    CAPTURE(j);
    const GradedDims g = graded_dims(M(j), 8);
    CHECK(g.dims == std::vector<std::size_t>{1, 2, 1, 0});
    const BraidedSpace v = BraidedSpace::of(M(j));
    for (std::size_t n = 0; n < g.dims.size(); ++n) {
      CHECK(symmetrizer_rank(v, n) == g.dims[n]);
      CHECK(exact_rank(symmetrizer_oracle(v, n)) == g.dims[n]);
    }
  }
  CHECK(graded_dims(catalog::omega(14), 8).dims == std::vector<std::size_t>{1, 4, 6, 4, 1, 0});
}

TEST_CASE("quadratic relations") {
  auto v1 = quadratic_relation_strings(V(1), {"v"});
  REQUIRE(v1.size() == 1);
  CHECK(v1[0] == "v*v");
  auto m1 = quadratic_relation_strings(M(1), {"p1", "p2"});
  std::sort(m1.begin(), m1.end());
  REQUIRE(m1.size() == 3);
  CHECK(m1[0] == "p1*p1");
  CHECK((m1[1] == "p1*p2 + p2*p1" || m1[1] == "p2*p1 + p1*p2"));
  CHECK(m1[2] == "p2*p2");
  // every relation lies in ker(1 + c)
  const BraidedSpace b = BraidedSpace::of(M(1));
  for (const Poly& r : quadratic_relations(b)) {
    Vec k = Vec::Zero(4);
    for (const auto& [w, c] : r.terms) k(static_cast<unsigned char>(w[0]) * 2 + static_cast<unsigned char>(w[1])) = c;
    const Mat kk = k;
    CHECK(Mat(kk + matmul(b.braiding, kk)) == Mat::Zero(4, 1));
  }
  const BraidedSpace identity{1, ident(1)};
  CHECK(quadratic_relations(identity).empty());
}

TEST_CASE("Hilbert series factorization") {
  CHECK(hilbert_factorization_check({V(5), M(1)}));
  CHECK(hilbert_factorization_check({V(1)}));
  CHECK(hilbert_factorization_check({M(1), M(2)}));
  CHECK(convolve({1, 2, 1}, {1, 2, 1}) == std::vector<std::size_t>{1, 4, 6, 4, 1});
}

TEST_CASE("reduced expressions give the same lift") {
  std::mt19937 rng(11);
  const BraidedSpace v = BraidedSpace::of(M(13));
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto w = reduced_word(perm);
    // second expression: reduce the inverse permutation and reverse it
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    auto w2 = reduced_word(inv);
    std::reverse(w2.begin(), w2.end());
    CHECK(w.size() == w2.size());
    CHECK(braid_lift(v, n, w) == braid_lift(v, n, w2));
  }
}

TEST_CASE("resource caps") {
  const BraidedSpace v = BraidedSpace::of(catalog::omega(14));
  CHECK_THROWS_AS(symmetrizer_rank(v, 9), ResourceError);
  NicholsCaps small;
  small.max_tensor_dim = 100;
  CHECK_THROWS_AS(graded_dims(v, 5, small), ResourceError);
}
