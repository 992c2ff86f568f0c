#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopflift/catalog.hpp"
#include "hopflift/ydmod.hpp"

using namespace hopflift;
using catalog::M;
using catalog::V;

namespace {

Mat flip(Index d) {
  Mat f = Mat::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) f(j * d + i, i * d + j) = Scalar(1);
  return f;
}

// c(v_i (x) w_j) = sum_k (h_k . w_j) (x) v_i over delta(v_i) = sum_k h_k (x) v_k
// written out by hand from the coaction and the action matrices.
Mat braiding_oracle(const YDModule& m) {
  const auto d = static_cast<Index>(m.dim());
  const auto& hd = m.parent();
  Mat c = Mat::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        for (std::size_t h = 0; h < hd.dim(); ++h) {
          const Scalar& coef = m.coaction()(static_cast<Index>(h) * d + k, i);
          if (coef.is_zero()) continue;
          for (Index r = 0; r < d; ++r) c(r * d + k, i * d + j) += coef * m.action(h)(r, j);
        }
  return c;
}

}  // namespace

TEST_CASE("every simple module is Yetter-Drinfeld") {
  for (const auto& name : catalog::simple_names()) {
    CAPTURE(name);
    const YDModule m = catalog::simple(name);
    CHECK(validate_yd(m).ok());
    const Mat c = braiding(m, m);
    CHECK(satisfies_braid_equation(c, m.dim()));
  }
  CHECK(validate_yd(catalog::trivial_module()).ok());
}

TEST_CASE("sign flip on one column of d breaks compatibility") {
  const YDModule m1 = M(1);
  std::vector<Mat> act = m1.actions();
  const std::size_t d_index = 1;  // a^0 b^0 c^0 d^1
  act[d_index].col(0) = -act[d_index].col(0);
  const YDReport r = validate_yd(YDModule(m1.parent_ptr(), act, m1.coaction(), "M1'"));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.first_failure().empty());
}

TEST_CASE("braidings") {
  CHECK(braiding(V(1), V(1)) == Mat::Constant(1, 1, Scalar(-1)));
  const YDModule t = catalog::trivial_module();
  CHECK(braiding(t, t) == Mat::Identity(1, 1));
  CHECK(braiding(M(1), M(1)) == Mat(-flip(2)));
  for (const auto& name : catalog::simple_names()) {
    CAPTURE(name);
    const YDModule m = catalog::simple(name);
    CHECK(braiding(m, m) == braiding_oracle(m));
  }
}

TEST_CASE("direct sums") {
  CHECK(direct_sum({M(1), M(1)}).dim() == 4);
  CHECK(catalog::omega(14).dim() == 4);
  CHECK(catalog::omega(2, {1, 1, 1, 1}).dim() == 6);
  const YDModule v1 = direct_sum({V(1)});
  CHECK(v1.actions() == V(1).actions());
  CHECK(v1.coaction() == V(1).coaction());
  CHECK(validate_yd(catalog::omega(2, {1, 1, 1, 1})).ok());
}

TEST_CASE("transfer to the dual keeps the braiding") {
  for (const char* name : {"V1", "M1", "M13", "trivial"}) {
    CAPTURE(name);
    const YDModule m = catalog::simple(name);
    const YDModule t = transfer_to_dual(m);
    CHECK(validate_yd(t).ok());
    CHECK(braiding(t, t) == braiding(m, m));
  }
  CHECK(braiding(transfer_to_dual(V(1)), transfer_to_dual(V(1))) == Mat::Constant(1, 1, Scalar(-1)));
}

TEST_CASE("involutive pairs") {
  CHECK(is_involutive_pair(V(5), M(1)));
  const YDModule t = catalog::trivial_module();
  CHECK(is_involutive_pair(t, t));
  CHECK_FALSE(is_involutive_pair(V(1), M(1)));
}

TEST_CASE("symmetric vectors") {
  for (int i = 1; i <= 8; ++i) CHECK_FALSE(find_symmetric_vector(V(i)).has_value());
  auto v = find_symmetric_vector(catalog::trivial_module());
  REQUIRE(v.has_value());
  CHECK_FALSE((*v)(0).is_zero());
  // none exists for V1 + M13 (see notes)
  CHECK_FALSE(find_symmetric_vector(direct_sum({V(1), M(13)})).has_value());
}
