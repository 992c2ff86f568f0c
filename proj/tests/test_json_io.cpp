#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopflift/json_io.hpp"

using namespace hopflift;
using namespace hopflift::catalog;

TEST_CASE("scalars and matrices") {
  const Scalar s = Scalar::parse("1/2-3*x");
  CHECK(io::scalar_from_json(io::to_json(s)) == s);
  CHECK(io::scalar_from_json(io::Json(7)) == Scalar(7));
  CHECK_THROWS(io::scalar_from_json(io::Json(1.5)));
  Mat m(2, 3);
  m << Scalar(1), Scalar::xi(), Scalar(0), Scalar(-2, 3), Scalar(5), Scalar(1);
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  CHECK(io::matrix_from_json(io::Json("x")) == Mat::Constant(1, 1, Scalar::xi()));
  CHECK_THROWS(io::matrix_from_json(io::Json::parse(R"([["1","2"],["3"]])")));
}

TEST_CASE("Hopf data round trip") {
  const HopfData back = io::hopf_from_json(io::to_json(*H()));
  CHECK(back == *H());
  const std::string text = io::to_json(*H()).dump();
  CHECK(io::to_json(io::hopf_from_json(io::Json::parse(text))).dump() == text);
}

TEST_CASE("modules round trip") {
  for (const char* name : {"V3", "M1", "M15"}) {
    const YDModule m = simple(name);
    const YDModule back = io::yd_from_json(io::to_json(m), H());
    CHECK(back.actions() == m.actions());
    CHECK(back.coaction() == m.coaction());
  }
}

TEST_CASE("parameters and witnesses") {
  const auto& f = family("U9");
  const ParamSet p = sample_params(f, default_n(f));
  const ParamSet back = io::params_from_json(io::to_json(p));
  CHECK(back.values == p.values);
  const io::Json w = io::Json::parse(R"({"tau": 17, "a": [["1", "x"], ["0", "1"]], "z1": "1/2"})");
  const IsoWitness iw = io::witness_from_json(w);
  CHECK(iw.tau == 17);
  CHECK(iw.scalar("z1") == Scalar(1, 2));
  CHECK(iw.matrix("a")(0, 1) == Scalar::xi());
  CHECK(io::to_json(iw) == w);
}
