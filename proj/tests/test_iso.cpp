#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hopflift/catalog.hpp"

using namespace hopflift;
using namespace hopflift::catalog;

namespace {

Mat scalar_mat(const char* s) { return Mat::Constant(1, 1, Scalar::parse(s)); }

std::vector<int> n_for(const std::string& fam) {
  const auto& f = family(fam);
  return f.n_count ? default_n(f) : std::vector<int>{};
}

bool morphism_holds(const std::string& fam, const std::vector<int>& n, const ParamSet& I, const ParamSet& Ip,
                    const IsoWitness& w) {
  const Presentation target = lifting(fam, n, Ip);
  return check_presented_morphism(lifting(fam, n, I), target, induced_morphism(fam, n, target, w)).ok();
}

}  // namespace

TEST_CASE("scalar case of U1") {
  const std::vector<int> n{1, 0, 0, 1, 0, 0, 0, 0};
  ParamSet I = zero_params(family("U1"), n), Ip = I;
  I.set("lambda", scalar_mat("1"));
  Ip.set("lambda", scalar_mat("4"));
  IsoWitness w;
  w.values["a"] = scalar_mat("1");
  w.values["d"] = scalar_mat("1/4");
  CHECK(iso_condition("U1", n, I, Ip, w));
  CHECK(morphism_holds("U1", n, I, Ip, w));
  w.values["d"] = scalar_mat("1/2");
  CHECK_FALSE(iso_condition("U1", n, I, Ip, w));
  CHECK_FALSE(morphism_holds("U1", n, I, Ip, w));
}

TEST_CASE("identity witness") {
  for (const char* fam : {"U1", "U14", "U38"}) {
    const std::string family_name = fam;
    CAPTURE(family_name);
    const auto n = n_for(fam);
    const ParamSet p = sample_params(family(fam), n);
    IsoWitness w;
    for (const auto& [name, m] : random_iso_instance(fam, n, 1, p, 0).first.values)
      w.values[name] = Mat::Identity(m.rows(), m.cols());
    if (std::string(fam) == "U14" || std::string(fam) == "U38") {
      w.values["z2"] = Mat::Zero(1, 1);
      w.values["beta1"] = Mat::Zero(1, 1);
    }
    CHECK(iso_condition(fam, n, p, p, w));
    CHECK(morphism_holds(fam, n, p, p, w));
  }
}

TEST_CASE("U14 with a mismatched alpha") {
  ParamSet I, Ip;
  I.set("lambda", Scalar(1));
  I.set("mu", Scalar(1));
  I.set("alpha", Scalar(0));
  Ip = I;
  Ip.set("alpha", Scalar(1));
  IsoWitness w;
  w.values["z1"] = scalar_mat("1");
  w.values["z2"] = scalar_mat("0");
  w.values["beta1"] = scalar_mat("0");
  w.values["beta2"] = scalar_mat("1");
  CHECK_FALSE(iso_condition("U14", {}, I, Ip, w));
  CHECK_FALSE(morphism_holds("U14", {}, I, Ip, w));
}

TEST_CASE("U45 rescaling") {
  ParamSet big, one;
  big.set("lambda", Scalar(4));
  big.set("mu", Scalar(9));
  one.set("lambda", Scalar(1));
  one.set("mu", Scalar(1));
  const Presentation u49 = lifting("U45", {}, big), u11 = lifting("U45", {}, one);
  auto images = [](const Presentation& t, const char* s, const char* r) {
    std::map<std::string, Poly> m;
    for (const char* g : {"p1", "p2"}) m[g] = parse_poly(t, std::string(s) + "*" + g);
    for (const char* g : {"q1", "q2"}) m[g] = parse_poly(t, std::string(r) + "*" + g);
    return m;
  };
  CHECK(check_presented_morphism(u49, u11, images(u11, "2", "3")).ok());
  CHECK(check_presented_morphism(u11, u49, images(u49, "1/2", "1/3")).ok());
  CHECK_FALSE(check_presented_morphism(u11, u49, images(u49, "2", "3")).ok());
  IsoWitness w;
  w.values["z"] = scalar_mat("2");
  w.values["beta"] = scalar_mat("3");
  CHECK(iso_condition("U45", {}, big, one, w));
}

TEST_CASE("a tau17 witness constrains nu") {
  const std::vector<int> n{0, 0, 0, 0, 1, 0, 0, 1};
  ParamSet Ip = zero_params(family("U1"), n);
  Ip.set("nu", scalar_mat("3"));
  REQUIRE(std::find(iso_branches("U1", n).begin(), iso_branches("U1", n).end(), 17) != iso_branches("U1", n).end());
  auto [w, I] = random_iso_instance("U1", n, 17, Ip, 5);
  CHECK(iso_condition("U1", n, I, Ip, w));
  CHECK(morphism_holds("U1", n, I, Ip, w));
  ParamSet bad = I;
  bad.set("nu", Mat(I.matrix("nu") + scalar_mat("1")));
  CHECK_FALSE(iso_condition("U1", n, bad, Ip, w));
  CHECK_FALSE(morphism_holds("U1", n, bad, Ip, w));
}

TEST_CASE("soundness on random witnesses") {
  for (const char* fam : {"U1", "U2", "U9", "U14", "U15", "U38", "U39"}) {
    const std::string family_name = fam;
    CAPTURE(family_name);
    const auto n = n_for(fam);
    const auto branches = iso_branches(fam, n);
    REQUIRE_FALSE(branches.empty());
    const ParamSet Ip = sample_params(family(fam), n, 1);
    const Presentation target = lifting(fam, n, Ip);
    for (unsigned seed = 0; seed < 20; ++seed) {
      const int tau = branches[seed % branches.size()];
      CAPTURE(tau);
      auto [w, I] = random_iso_instance(fam, n, tau, Ip, seed);
      REQUIRE(iso_condition(fam, n, I, Ip, w));
      CHECK(check_presented_morphism(lifting(fam, n, I), target, induced_morphism(fam, n, target, w)).ok());
    }
  }
}

TEST_CASE("perturbed parameters break the induced map") {
  for (const char* fam : {"U2", "U14", "U39"}) {
    const std::string family_name = fam;
    CAPTURE(family_name);
    const auto n = n_for(fam);
    const ParamSet Ip = sample_params(family(fam), n, 2);
    auto [w, I] = random_iso_instance(fam, n, iso_branches(fam, n).back(), Ip, 9);
    ParamSet bad = I;
    const std::string first = family(fam).params.back();
    Mat m = bad.matrix(first);
    m(0, 0) += Scalar(1);
    bad.set(first, m);
    CHECK_FALSE(iso_condition(fam, n, bad, Ip, w));
    CHECK_FALSE(morphism_holds(fam, n, bad, Ip, w));
  }
}
