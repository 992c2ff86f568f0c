// Batch front end. Every command prints one JSON report on stdout.
// Exit codes: 0 all checks pass, 1 some check fails, 2 usage error,
// 3 a resource cap was hit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hopflift/catalog.hpp"
#include "hopflift/json_io.hpp"
#include "hopflift/nichols.hpp"
#include "hopflift/suite.hpp"

using namespace hopflift;
using namespace hopflift::catalog;
using io::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  Json doc;
  bool ok = true;
  bool capped = false;

  Report(const std::string& command, Json subject) {
    doc["schema"] = 1;
    doc["command"] = command;
    doc["subject"] = std::move(subject);
    doc["checks"] = Json::array();
  }

  void check(const std::string& name, bool passed, const std::string& witness = {}) {
    Json c{{"name", name}, {"status", passed ? "pass" : "fail"}};
    if (!passed) c["witness"] = witness.empty() ? "unspecified" : witness;
    doc["checks"].push_back(std::move(c));
    ok = ok && passed;
  }

  void value(const std::string& name, Json v) { doc["checks"].push_back({{"name", name}, {"status", "value"}, {"value", std::move(v)}}); }

  int finish() {
    doc["ok"] = ok;
    std::cout << doc.dump(2) << "\n";
    if (capped) return 3;
    return ok ? 0 : 1;
  }
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<int> parse_n(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("--n expects comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

struct LiftArgs {
  std::string family;
  std::string n;
  std::string params;
  bool zero = false;
};

struct Lift {
  std::string family;
  std::vector<int> n;
  ParamSet params;
  Json subject;
};

Lift resolve(const LiftArgs& a) {
  const FamilyInfo& f = family(a.family);
  Lift l{f.name, parse_n(a.n), {}, {}};
  if (l.n.empty() && f.n_count) l.n = default_n(f);
  if (l.n.size() != f.n_count) throw UsageError(f.name + " takes " + std::to_string(f.n_count) + " multiplicities");
  if (!a.params.empty())
    l.params = io::params_from_json(read_json(a.params));
  else
    l.params = a.zero ? zero_params(f, l.n) : sample_params(f, l.n);
  l.subject = {{"kind", "lifting"}, {"name", f.name}, {"n", l.n}, {"params", io::to_json(l.params)}};
  return l;
}

void add_lift_options(CLI::App* cmd, LiftArgs& a) {
  cmd->add_option("family", a.family, "family name, e.g. U14")->required();
  cmd->add_option("--n", a.n, "multiplicities, e.g. 1,0,0,1,0,0,0,0");
  cmd->add_option("--params", a.params, "ParamSet JSON file (default: generic sample)");
  cmd->add_flag("--zero", a.zero, "use all-zero parameters");
}

std::shared_ptr<const HopfData> hopf_by_name(const std::string& name) {
  if (name == "H") return H();
  if (name == "Hdual" || name == "H*") return H_dual();
  if (name == "Z2") return std::make_shared<HopfData>(cyclic_group_algebra(2));
  throw UsageError("unknown Hopf algebra '" + name + "' (H, Hdual, Z2)");
}

YDModule module_by_name(const std::string& name, const std::vector<int>& n) {
  for (const char* prefix : {"Omega_", "Omega"})
    if (name.rfind(prefix, 0) == 0) return omega(std::stoi(name.substr(std::string(prefix).size())), n);
  return simple(name);
}

int verify_hopf(const std::string& name, const std::string& file) {
  const HopfData h = file.empty() ? *hopf_by_name(name) : io::hopf_from_json(read_json(file));
  Report r("verify hopf", {{"kind", "hopf"}, {"name", file.empty() ? name : file}, {"dim", h.dim()}});
  for (const auto& c : verify_axioms(h).checks) {
    std::string w;
    if (!c.passed) {
      w = c.detail;
      for (auto i : c.witness) w += (w.empty() ? "" : " ") + h.basis_names()[i];
    }
    r.check(c.name, c.passed, w);
  }
  return r.finish();
}

int verify_yd(const std::string& name, const std::string& file) {
  std::vector<YDModule> mods;
  if (!file.empty())
    mods.push_back(io::yd_from_json(read_json(file), H()));
  else if (name == "all")
    for (const auto& s : simple_names()) mods.push_back(simple(s));
  else
    mods.push_back(module_by_name(name, {}));
  Report r("verify yd", {{"kind", "simple_module"}, {"name", file.empty() ? name : file}});
  for (const auto& m : mods) {
    for (const auto& c : validate_yd(m).checks) r.check(m.name() + ": " + c.identity, c.passed, c.witness);
    r.check(m.name() + ": braid equation", satisfies_braid_equation(braiding(m, m), m.dim()), "c1 c2 c1 != c2 c1 c2");
  }
  return r.finish();
}

int verify_aut() {
  Report r("verify aut", {{"kind", "automorphism"}, {"name", "tau1..tau32"}});
  const AutReport a = automorphism_group_check();
  for (const auto& c : a.checks) {
    if (c.required)
      r.check(c.name, c.passed, c.detail);
    else
      r.value(c.name, c.passed);
  }
  r.value("group order", a.order);
  r.check("order 32", a.order == 32, std::to_string(a.order));
  return r.finish();
}

int nichols_dims(const std::string& name, const std::string& n, std::size_t max_degree) {
  const YDModule m = module_by_name(name, parse_n(n));
  Report r("nichols dims", {{"kind", "simple_module"}, {"name", name}, {"dim", m.dim()}, {"max_degree", max_degree}});
  NicholsCaps caps;
  caps.max_degree = max_degree;
  caps.max_tensor_dim = 1000000;
  const GradedDims g = graded_dims(m, max_degree, caps);
  r.value("graded dimensions", g.dims);
  r.value("total", g.total());
  r.check("terminated below the degree cap", g.terminated, "series still nonzero in degree " + std::to_string(max_degree));
  if (!g.terminated) r.capped = true;
  return r.finish();
}

int lift_dim(const LiftArgs& a, std::size_t word_bound) {
  const Lift l = resolve(a);
  Report r("lift dim", l.subject);
  const BasisResult b = enumerate_basis(lifting(l.family, l.n, l.params), word_bound);
  r.value("dimension", b.words.size());
  if (!b.complete) {
    r.check("basis complete", false, "word bound " + std::to_string(word_bound) + " reached");
    r.capped = true;
    return r.finish();
  }
  const std::size_t expect = expected_dimension(l.family, l.n);
  r.check("matches closed form " + std::to_string(expect), b.words.size() == expect, std::to_string(b.words.size()));
  return r.finish();
}

int lift_confluence(const LiftArgs& a) {
  const Lift l = resolve(a);
  Report r("lift confluence", l.subject);
  const Presentation p = lifting(l.family, l.n, l.params);
  const OverlapReport o = confluence_check(p);
  r.value("overlaps", o.overlaps.size());
  r.check("all overlaps resolve", o.confluent(), std::to_string(o.failures()) + " unresolved overlaps");
  return r.finish();
}

int lift_hopf_check(const LiftArgs& a) {
  const Lift l = resolve(a);
  Report r("lift hopf-check", l.subject);
  const Presentation p = lifting(l.family, l.n, l.params);
  const CheckReport b = check_bialgebra_on_presentation(p);
  r.check("bialgebra", b.ok(), b.ok() ? "" : b.failures.front());
  const auto s = find_antipode(p);
  r.check("antipode", s.has_value(), "no antipode solves m(S x id)Delta = eps");
  if (s) {
    Json images = Json::object();
    for (const auto& [letter, poly] : *s) images[p.name(letter)] = p.str(p.normal_form(poly));
    r.value("antipode on generators", images);
  }
  return r.finish();
}

int iso_check(const std::string& fam, const std::string& n_text, const std::string& fi, const std::string& fip,
              const std::string& fw) {
  const FamilyInfo& f = family(fam);
  std::vector<int> n = parse_n(n_text);
  if (n.empty() && f.n_count) n = default_n(f);
  const ParamSet I = io::params_from_json(read_json(fi));
  const ParamSet Ip = io::params_from_json(read_json(fip));
  const IsoWitness w = io::witness_from_json(read_json(fw));
  Report r("iso check", {{"kind", "lifting"}, {"name", f.name}, {"n", n}, {"I", io::to_json(I)},
                          {"Iprime", io::to_json(Ip)}, {"witness", io::to_json(w)}});
  const bool cond = iso_condition(f.name, n, I, Ip, w);
  r.check("matrix conditions", cond, "the witness does not carry I' to I");
  const Presentation target = lifting(f.name, n, Ip);
  const CheckReport m = check_presented_morphism(lifting(f.name, n, I), target, induced_morphism(f.name, n, target, w));
  r.check("induced map is a Hopf morphism", m.ok(), m.ok() ? "" : m.failures.front());
  return r.finish();
}

int catalog_list() {
  Report r("catalog list", {{"kind", "catalog"}});
  Json keys = Json::array();
  keys.push_back({{"kind", "hopf"}, {"name", "H"}, {"dim", 16}});
  keys.push_back({{"kind", "hopf"}, {"name", "Hdual"}, {"dim", 16}});
  for (int k = 1; k <= 32; ++k) {
    const TauImages t = tau_images(k);
    keys.push_back({{"kind", "automorphism"}, {"name", "tau" + std::to_string(k)}, {"images", {t.a, t.b, t.c, t.d}}});
  }
  for (const auto& s : simple_names()) keys.push_back({{"kind", "simple_module"}, {"name", s}, {"dim", simple(s).dim()}});
  for (int i = 1;; ++i) {
    try {
      const OmegaInfo& o = omega_info(i);
      Json e{{"kind", "omega"}, {"name", "Omega_" + std::to_string(i)}, {"multiplied", o.multiplied}, {"fixed", o.fixed}};
      if (o.block) e["block"] = o.block;
      keys.push_back(std::move(e));
    } catch (const CatalogError&) {
      break;
    }
  }
  for (const auto& f : families())
    keys.push_back({{"kind", "lifting"}, {"name", f.name}, {"omega", f.omega}, {"multiplicities", f.n_count},
                    {"params", f.params}});
  r.value("keys", keys);
  return r.finish();
}

int suite_all() {
  Report r("suite all", {{"kind", "suite"}});
  for (const auto& c : run_suite())
    r.check("criterion " + std::to_string(c.id) + ": " + c.name, c.pass, c.note);
  return r.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the 16-dimensional Hopf algebra H and its liftings"};
  app.require_subcommand(1);
  std::size_t max_degree = 8, word_bound = 100000;

  auto* verify = app.add_subcommand("verify", "axiom and validity checks")->require_subcommand(1);
  std::string hopf_name = "H", hopf_file, yd_name = "all", yd_file;
  auto* v_hopf = verify->add_subcommand("hopf", "Hopf algebra axioms");
  v_hopf->add_option("name", hopf_name, "H, Hdual or Z2");
  v_hopf->add_option("--file", hopf_file, "HopfData JSON file");
  auto* v_yd = verify->add_subcommand("yd", "Yetter-Drinfeld module checks");
  v_yd->add_option("name", yd_name, "module name (V1..V8, M1..M20, trivial, Omega_i) or all");
  v_yd->add_option("--file", yd_file, "module JSON file over H");
  auto* v_aut = verify->add_subcommand("aut", "the 32 automorphisms of H");

  auto* nichols = app.add_subcommand("nichols", "Nichols algebras")->require_subcommand(1);
  std::string nichols_name, nichols_n;
  auto* n_dims = nichols->add_subcommand("dims", "graded dimensions");
  n_dims->add_option("module", nichols_name, "V3, M13, Omega_14, ...")->required();
  n_dims->add_option("--n", nichols_n, "multiplicities for Omega");
  n_dims->add_option("--max-degree", max_degree, "degree cap")->check(CLI::Range(1, 16));

  auto* lift = app.add_subcommand("lift", "lifted Hopf algebras")->require_subcommand(1);
  LiftArgs dim_args, conf_args, hopf_args;
  auto* l_dim = lift->add_subcommand("dim", "dimension from the irreducible words");
  add_lift_options(l_dim, dim_args);
  l_dim->add_option("--word-bound", word_bound, "maximum number of basis words");
  auto* l_conf = lift->add_subcommand("confluence", "overlap check");
  add_lift_options(l_conf, conf_args);
  auto* l_hopf = lift->add_subcommand("hopf-check", "coproduct and antipode");
  add_lift_options(l_hopf, hopf_args);

  auto* iso = app.add_subcommand("iso", "isomorphisms between liftings")->require_subcommand(1);
  std::string iso_family, iso_n, iso_I, iso_Ip, iso_w;
  auto* i_check = iso->add_subcommand("check", "check a witness for I ~ I'");
  i_check->add_option("family", iso_family)->required();
  i_check->add_option("--n", iso_n, "multiplicities");
  i_check->add_option("--I", iso_I, "ParamSet JSON of the source")->required();
  i_check->add_option("--Iprime", iso_Ip, "ParamSet JSON of the target")->required();
  i_check->add_option("--witness", iso_w, "witness JSON: tau and matrices")->required();

  auto* cat = app.add_subcommand("catalog", "named objects")->require_subcommand(1);
  auto* c_list = cat->add_subcommand("list", "list catalog keys");
  auto* suite = app.add_subcommand("suite", "acceptance checks")->require_subcommand(1);
  auto* s_all = suite->add_subcommand("all", "run every acceptance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*v_hopf) return verify_hopf(hopf_name, hopf_file);
    if (*v_yd) return verify_yd(yd_name, yd_file);
    if (*v_aut) return verify_aut();
    if (*n_dims) return nichols_dims(nichols_name, nichols_n, max_degree);
    if (*l_dim) return lift_dim(dim_args, word_bound);
    if (*l_conf) return lift_confluence(conf_args);
    if (*l_hopf) return lift_hopf_check(hopf_args);
    if (*i_check) return iso_check(iso_family, iso_n, iso_I, iso_Ip, iso_w);
    if (*c_list) return catalog_list();
    if (*s_all) return suite_all();
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const RewriteLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CatalogError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
