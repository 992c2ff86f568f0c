#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopflift/catalog.hpp"
#include "hopflift/nichols.hpp"
#include "hopflift/present.hpp"

using namespace hopflift;
using namespace hopflift::catalog;

namespace {

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

ParamSet u14(const char* lambda, const char* mu, const char* alpha) {
  ParamSet p;
  p.set("lambda", Scalar::parse(lambda));
  p.set("mu", Scalar::parse(mu));
  p.set("alpha", Scalar::parse(alpha));
  return p;
}

}  // namespace

TEST_CASE("parsing") {
  const Presentation u = lifting("U14", {}, u14("1", "1", "1"));
  CHECK(u.num_letters() == 8);
  CHECK(u.num_module_letters() == 4);
  const Presentation free = parse_presentation("gens: | t\n");
  CHECK(free.rules().empty());
  CHECK(enumerate_basis(free, 10).complete == false);
  // rewriting must lower the number of module letters
  CHECK_THROWS_AS(parse_presentation("gens: | p1\nrel: p1 -> p1*p1\n"), OrientationError);
  CHECK_NOTHROW(parse_presentation("gens: | p1\neq: p1*p1 = p1\n"));
  CHECK_THROWS(parse_presentation("gens: a | p1\nrel: q*a -> a\n"));
}

TEST_CASE("normal forms in U14") {
  const Presentation u = lifting("U14", {}, u14("2", "-1", "1/2+x"));
  CHECK(u.normal_form(parse_poly(u, "p1*p1")).is_zero());
  const Poly lhs = u.normal_form(parse_poly(u, "q2*p1"));
  CHECK(lhs == u.normal_form(parse_poly(u, "-p1*q2 + (1/2+x)*(1 - b*c)")));
  const Poly w = parse_poly(u, "d*p2*q1*a");
  CHECK(u.normal_form(parse_poly(u, "1") * w) == u.normal_form(w));
  // idempotent, and nf(uv) = nf(nf(u) nf(v))
  const Poly x = parse_poly(u, "q2*d*p1 + b*q1");
  const Poly y = parse_poly(u, "p2*c*q2 - d");
  CHECK(u.normal_form(u.normal_form(x)) == u.normal_form(x));
  CHECK(u.normal_form(x * y) == u.normal_form(u.normal_form(x) * u.normal_form(y)));
  CHECK(u.normal_form(x + y) == u.normal_form(x) + u.normal_form(y));
}

TEST_CASE("confluence") {
  const std::string dsl = lifting_dsl("U14", {}, u14("2", "-1", "3"));
  CHECK(confluence_check(parse_presentation(dsl)).confluent());
  CHECK(confluence_check(parse_presentation("gens: | s t\n")).confluent());
  const std::string bad =
      replace_once(dsl, "eq: p2*q1 + q1*p2 = alpha*(1 - b*c)", "eq: p2*q1 + q1*p2 = 5*(1 - b*c)");
  const OverlapReport r = confluence_check(parse_presentation(bad));
  CHECK_FALSE(r.confluent());
  CHECK(r.failures() > 0);
}

TEST_CASE("basis sizes") {
  const Presentation u1 = lifting("U1", {1, 0, 0, 1, 0, 0, 0, 0}, sample_params(family("U1"), {1, 0, 0, 1, 0, 0, 0, 0}));
  CHECK(enumerate_basis(u1).words.size() == 64);
  for (const char* f : {"U14", "U38", "U44"}) {
    CAPTURE(f);
    const auto b = enumerate_basis(lifting(f, {}, sample_params(family(f), {})));
    CHECK(b.complete);
    CHECK(b.words.size() == 256);
  }
}

TEST_CASE("smash products") {
  const Presentation r1 = tensor_algebra_quotient({"x1"}, quadratic_relations(V(1)));
  const Presentation s1 = smash_product(r1, h_presentation(), *H(), V(1));
  CHECK(enumerate_basis(s1).words.size() == 32);
  const Presentation k = tensor_algebra_quotient({}, {});
  const Presentation sh = smash_product(k, h_presentation(), *H(), YDModule(H(), std::vector<Mat>(16, Mat(0, 0)), Mat(0, 0), "zero"));
  CHECK(enumerate_basis(sh).words.size() == 16);
  CHECK_FALSE(compare_structure_constants(sh, h_presentation()).has_value());
  const Presentation s14 = bosonization(14);
  CHECK_FALSE(compare_structure_constants(s14, lifting("U14", {}, u14("0", "0", "0"))).has_value());
}

TEST_CASE("bialgebra checks") {
  CHECK(check_bialgebra_on_presentation(h_presentation()).ok());
  const std::string dsl = lifting_dsl("U14", {}, u14("1", "2", "3"));
  CHECK(check_bialgebra_on_presentation(parse_presentation(dsl)).ok());
  const std::string bad = replace_once(dsl, "coprod: p1 = p1 @ 1 + b @ p1", "coprod: p1 = p1 @ 1 + c @ p1");
  CHECK_FALSE(check_bialgebra_on_presentation(parse_presentation(bad)).ok());
}

TEST_CASE("antipodes") {
  const Presentation u2 = lifting("U2", {0, 0, 0, 0}, sample_params(family("U2"), {0, 0, 0, 0}));
  const auto s = find_antipode(u2);
  REQUIRE(s.has_value());
  const char p1 = *u2.letter("p1");
  CHECK(u2.normal_form(s->at(p1)) == u2.normal_form(parse_poly(u2, "-b*p1")));
  const auto sh = find_antipode(h_presentation());
  REQUIRE(sh.has_value());
  for (const char* g : {"a", "b", "c"}) CHECK(sh->at(*h_presentation().letter(g)) == h_presentation().gen(g));
}

TEST_CASE("presented morphisms") {
  const Presentation u = lifting("U14", {}, u14("1", "2", "3"));
  CHECK(check_presented_morphism(u, u, {}).ok());
  const Presentation v = lifting("U14", {}, u14("1", "2", "4"));
  CHECK_FALSE(check_presented_morphism(u, v, {}).ok());
}
