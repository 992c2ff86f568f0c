#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopflift/scalar.hpp"

using hopflift::Scalar;

namespace {

// Reference arithmetic on (re, im) pairs with xi^2 = -1.
struct Pair {
  mpq_class re, im;
};

Pair mul(const Pair& u, const Pair& v) { return {u.re * v.re - u.im * v.im, u.re * v.im + u.im * v.re}; }

Scalar of(const Pair& p) { return Scalar(p.re, p.im); }

Pair random_pair(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("xi squared") { CHECK(Scalar::xi() * Scalar::xi() == Scalar(-1)); }

TEST_CASE("half conjugate product") {
  const Scalar h(1, 2);
  const Scalar u = h * (Scalar(1) + Scalar::xi());
  const Scalar v = h * (Scalar(1) - Scalar::xi());
  CHECK(u * v == h);
  CHECK(u * v == Scalar::parse("1/2"));
}

TEST_CASE("additive identity") {
  const Scalar s = Scalar::parse("3/5-2*x");
  CHECK(s + Scalar(0) == s);
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"0", "1", "-1", "x", "-x", "1/2", "1+x", "1/2-1/2*x", "(1/2)*(1+x)", "-7/3*x", "2-x"}) {
    const Scalar s = Scalar::parse(text);
    CHECK(Scalar::parse(s.str()) == s);
  }
  CHECK(Scalar::parse("(1/2)*(1+x)") == Scalar(mpq_class(1, 2), mpq_class(1, 2)));
  CHECK_THROWS(Scalar::parse("1/0"));
  CHECK_THROWS(Scalar::parse("y"));
}

TEST_CASE("sqrt witnesses") {
  CHECK(hopflift::sqrt_witness(Scalar(4), Scalar(2)));
  CHECK(hopflift::sqrt_witness(Scalar(-1), Scalar::xi()));
  CHECK_FALSE(hopflift::sqrt_witness(Scalar::xi(), Scalar(1)));
  CHECK(hopflift::exact_sqrt(Scalar(9, 4)).has_value());
  CHECK_FALSE(hopflift::exact_sqrt(Scalar(2)).has_value());
  // 2i = (1+i)^2
  auto r = hopflift::exact_sqrt(Scalar::parse("2*x"));
  REQUIRE(r.has_value());
  CHECK(*r * *r == Scalar::parse("2*x"));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Pair p = random_pair(rng), q = random_pair(rng), r = random_pair(rng);
    const Scalar a = of(p), b = of(q), c = of(r);
    CHECK(a * b == of(mul(p, q)));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    CHECK(a - a == Scalar(0));
  }
}
