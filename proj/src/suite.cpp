#include "hopflift/suite.hpp"

#include <chrono>
#include <sstream>

#include "hopflift/catalog.hpp"
#include "hopflift/linalg.hpp"
#include "hopflift/nichols.hpp"

namespace hopflift {

using namespace catalog;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) note << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

std::vector<int> n_for(const FamilyInfo& f) { return f.n_count ? default_n(f) : std::vector<int>{}; }

void hopf_axioms(Outcome& o) {
  const AxiomReport r = verify_axioms(*H());
  o.require(r.checks.size() == 6 && r.ok(), "H fails an axiom group");
  std::size_t caught = 0;
  const auto mutations = h_relation_mutations();
  for (const auto& m : mutations) {
    const AxiomReport mr = verify_axioms(hopf_from_dsl(m.dsl));
    bool witnessed = !mr.ok();
    for (const auto& c : mr.checks)
      if (!c.passed && c.witness.empty() && c.detail.empty()) witnessed = false;
    o.require(witnessed, "mutation " + m.label + " not detected");
    caught += witnessed;
  }
  o.note << "6 axiom groups pass; " << caught << "/" << mutations.size() << " relation mutations fail with witness";
}

void group_likes_of_h(Outcome& o) {
  const auto h = H();
  const GroupLikes g = group_likes(*h);
  o.require(g.conclusive, "search inconclusive");
  o.require(g.elements.size() == 8, "expected 8 group-likes");
  const Vec one = h->unit();
  std::size_t monomials = 0;
  for (const auto& x : g.elements) {
    o.require(h->multiply(x, x) == one, "a group-like of order > 2");
    for (const auto& y : g.elements) {
      bool closed = false;
      for (const auto& z : g.elements) closed = closed || h->multiply(x, y) == z;
      o.require(closed, "not closed under multiplication");
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          Vec e = Vec::Zero(16);
          e(8 * i + 4 * j + 2 * k) = Scalar(1);
          monomials += x == e;
        }
  }
  o.require(monomials == 8, "group-likes are not the monomials a^i b^j c^k");
  o.note << g.elements.size() << " group-likes, elementary abelian of order 8, spanned by a, b, c";
}

void automorphisms(Outcome& o) {
  const AutReport r = automorphism_group_check();
  for (const auto& c : r.checks)
    if (c.required) o.require(c.passed, c.name + " " + c.detail);
  o.require(r.order == 32, "group order " + std::to_string(r.order));
  o.note << "32 Hopf automorphisms, closure of order " << r.order << ", group relations hold";
}

void yd_validation(Outcome& o) {
  std::size_t valid = 0;
  for (const auto& name : simple_names()) {
    if (name == "trivial") continue;
    const YDModule m = simple(name);
    const bool ok = validate_yd(m).ok() && satisfies_braid_equation(braiding(m, m), m.dim());
    o.require(ok, name);
    valid += ok;
  }
  o.note << valid << "/28 simple modules valid with braid equation";
}

void nichols_dims(Outcome& o) {
  for (int i = 1; i <= 8; ++i)
    o.require(graded_dims(V(i), 8).dims == std::vector<std::size_t>{1, 1, 0}, "V" + std::to_string(i));
  for (int j = 1; j <= 20; ++j)
    o.require(graded_dims(M(j), 8).dims == std::vector<std::size_t>{1, 2, 1, 0}, "M" + std::to_string(j));
  const auto cases = involutive_cases();
  for (const auto& [v, w] : cases) o.require(is_involutive_pair(simple(v), simple(w)), v + "," + w);
  for (int i = 1; i <= 8; ++i)
    for (int j = 13; j <= 20; ++j)
      o.require(!is_involutive_pair(V(i), M(j)), "V" + std::to_string(i) + ",M" + std::to_string(j));
  o.note << "V: [1,1,0], M: [1,2,1,0]; " << cases.size() << " involutive cases true, 64 (V,M13..20) pairs false";
}

void dual_transfer(Outcome& o) {
  std::size_t ok = 0;
  for (const auto& name : simple_names()) {
    if (name == "trivial") continue;
    const YDModule m = simple(name);
    const YDModule t = transfer_to_dual(m);
    const bool good = validate_yd(t).ok() && braiding(t, t) == braiding(m, m);
    o.require(good, name);
    ok += good;
  }
  o.note << ok << "/28 transfers valid over H* with equal braidings";
}

void lifting_dims(Outcome& o) {
  std::size_t runs = 0;
  auto check = [&](const FamilyInfo& f, const std::vector<int>& n, std::size_t expect) {
    for (const ParamSet& p : {zero_params(f, n), sample_params(f, n, 0), sample_params(f, n, 1)}) {
      const BasisResult b = enumerate_basis(lifting(f.name, n, p));
      o.require(b.complete && b.words.size() == expect, f.name);
      ++runs;
    }
  };
  const FamilyInfo& u1 = family("U1");
  for (int mask = 1; mask < 256; ++mask) {
    std::vector<int> n(8);
    int sum = 0;
    for (int i = 0; i < 8; ++i) sum += n[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    if (sum <= 3) check(u1, n, std::size_t{1} << (4 + sum));
  }
  check(u1, std::vector<int>(8, 1), 4096);
  check(family("U2"), {1, 1, 1, 1}, 1024);
  check(family("U9"), {1, 1, 1, 1}, 1024);
  for (const char* f : {"U14", "U15", "U16", "U20", "U23", "U29", "U38", "U39", "U41", "U42", "U44", "U45"})
    check(family(f), {}, 256);
  o.note << runs << " basis enumerations match the closed forms";
}

void confluence(Outcome& o) {
  for (const auto& f : families()) {
    const auto n = n_for(f);
    o.require(confluence_check(lifting(f.name, n, sample_params(f, n))).confluent(), f.name);
  }
  ParamSet p;
  p.set("lambda", Scalar(2));
  p.set("mu", Scalar(-1));
  p.set("alpha", Scalar(3));
  std::string dsl = lifting_dsl("U14", {}, p);
  const std::string line = "eq: p2*q1 + q1*p2 = alpha*(1 - b*c)";
  const auto at = dsl.find(line);
  o.require(at != std::string::npos, "U14 relation not found");
  std::size_t failures = 0;
  if (at != std::string::npos) {
    dsl.replace(at, line.size(), "eq: p2*q1 + q1*p2 = 4*(1 - b*c)");
    failures = confluence_check(parse_presentation(dsl)).failures();
    o.require(failures > 0, "unequal U14 constants still confluent");
  }
  o.note << families().size() << " families confluent; unequal U14 constants give " << failures
         << " unresolved overlaps";
}

void hopf_liftings(Outcome& o) {
  for (const auto& f : families()) {
    const auto n = n_for(f);
    const Presentation u = lifting(f.name, n, sample_params(f, n));
    o.require(check_bialgebra_on_presentation(u).ok(), f.name + " bialgebra");
    o.require(find_antipode(u).has_value(), f.name + " antipode");
  }
  o.note << families().size() << " families: coproduct respects relations and an antipode exists";
}

void trivial_liftings(Outcome& o) {
  std::size_t probes = 0;
  for (int index : {4, 5, 19, 21, 22, 30}) {
    const auto ps = deformation_probes(index);
    o.require(!ps.empty(), "no probes for Omega " + std::to_string(index));
    for (const auto& p : ps) {
      o.require(p.rejected, "Omega " + std::to_string(index) + ": " + p.relation + " accepts " + p.constant);
      ++probes;
    }
  }
  // control: some deformations of Omega_2 do survive
  std::size_t accepted = 0;
  for (const auto& p : deformation_probes(2, {1, 1, 1, 1})) accepted += !p.rejected;
  o.require(accepted > 0, "control Omega 2 rejects every deformation");
  o.note << probes << " probes rejected on Omega 4, 5, 19, 21, 22, 30; control Omega 2 accepts " << accepted;
}

void isomorphisms(Outcome& o) {
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
  o.require(check_presented_morphism(u49, u11, images(u11, "2", "3")).ok(), "U45(4,9) -> U45(1,1)");
  o.require(check_presented_morphism(u11, u49, images(u49, "1/2", "1/3")).ok(), "U45(1,1) -> U45(4,9)");
  std::size_t instances = 0;
  for (const char* fam : {"U1", "U2", "U9", "U14", "U15", "U38", "U39"}) {
    const FamilyInfo& f = family(fam);
    const auto n = n_for(f);
    const auto branches = iso_branches(fam, n);
    const ParamSet Ip = sample_params(f, n, 1);
    const Presentation target = lifting(fam, n, Ip);
    for (unsigned seed = 0; seed < 20; ++seed) {
      const int tau = branches[seed % branches.size()];
      auto [w, I] = random_iso_instance(fam, n, tau, Ip, seed);
      o.require(iso_condition(fam, n, I, Ip, w), std::string(fam) + " witness rejected");
      o.require(check_presented_morphism(lifting(fam, n, I), target, induced_morphism(fam, n, target, w)).ok(),
                std::string(fam) + " tau" + std::to_string(tau) + " unsound");
      ++instances;
    }
  }
  o.note << "U45(4,9) ~ U45(1,1) verified both ways; " << instances << " random witnesses sound";
}

void graded_at_zero(Outcome& o) {
  const auto a = compare_structure_constants(lifting("U14", {}, zero_params(family("U14"), {})), bosonization(14));
  o.require(!a.has_value(), "U14: " + a.value_or(""));
  const std::vector<int> z{0, 0, 0, 0};
  const auto b = compare_structure_constants(lifting("U2", z, zero_params(family("U2"), z)), bosonization(2, z));
  o.require(!b.has_value(), "U2: " + b.value_or(""));
  o.note << "U14(0) and U2(n=0) equal their bosonizations";
}

using Criterion = void (*)(Outcome&);

const std::vector<std::pair<const char*, Criterion>>& criteria() {
  static const std::vector<std::pair<const char*, Criterion>> list{
      {"Hopf axioms", hopf_axioms},
      {"group-likes", group_likes_of_h},
      {"automorphisms", automorphisms},
      {"YD validation", yd_validation},
      {"Nichols dimensions", nichols_dims},
      {"dual transfer", dual_transfer},
      {"lifting dimensions", lifting_dims},
      {"confluence", confluence},
      {"Hopf structure of liftings", hopf_liftings},
      {"trivial liftings", trivial_liftings},
      {"isomorphism checks", isomorphisms},
      {"graded at zero", graded_at_zero},
  };
  return list;
}

}  // namespace

std::size_t criterion_count() { return criteria().size(); }

CriterionResult run_criterion(int id) {
  const auto& [name, fn] = criteria().at(static_cast<std::size_t>(id - 1));
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    fn(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {id, name, o.pass, o.note.str(), secs};
}

std::vector<CriterionResult> run_suite() {
  std::vector<CriterionResult> out;
  for (std::size_t i = 1; i <= criterion_count(); ++i) out.push_back(run_criterion(static_cast<int>(i)));
  return out;
}

}  // namespace hopflift
