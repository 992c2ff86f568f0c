#include <algorithm>
#include <mutex>
#include <set>

#include "hopflift/catalog.hpp"

namespace hopflift::catalog {

std::string h_dsl() {
  return R"(gens: a b c d |
rel: a*a -> 1
rel: b*b -> 1
rel: c*c -> 1
rel: b*a -> a*b
rel: c*a -> a*c
rel: c*b -> b*c
rel: d*d -> a
rel: d*a -> a*d
rel: d*b -> c*d
rel: d*c -> b*d
coprod: a = a @ a
coprod: b = b @ b
coprod: c = c @ c
coprod: d = (1/2)*(1 + b*c)*d @ d + (1/2)*(1 - b*c)*d @ a*d
counit: a = 1
counit: b = 1
counit: c = 1
counit: d = 1
antipode: a = a
antipode: b = b
antipode: c = c
antipode: d = (1/2)*(a*(1 + b*c) + (1 - b*c))*d
)";
}

const Presentation& h_presentation() {
  static const Presentation p = parse_presentation(h_dsl());
  return p;
}

const std::vector<Word>& h_basis() {
  static const std::vector<Word> basis = [] {
    std::vector<Word> out;
    for (int idx = 0; idx < 16; ++idx) {
      Word w;
      if (idx & 8) w += '\0';
      if (idx & 4) w += '\1';
      if (idx & 2) w += '\2';
      if (idx & 1) w += '\3';
      out.push_back(w);
    }
    return out;
  }();
  return basis;
}

HopfData hopf_from_dsl(const std::string& dsl) {
  return hopf_data_from_presentation(parse_presentation(dsl), h_basis());
}

std::shared_ptr<const HopfData> H() {
  static const auto h = std::make_shared<const HopfData>(hopf_from_dsl(h_dsl()));
  return h;
}

std::shared_ptr<const HopfData> H_dual() {
  static const auto h = std::make_shared<const HopfData>(dualize(*H()));
  return h;
}

Element h_element(const std::string& expr) {
  const Presentation& p = h_presentation();
  Poly x = parse_poly(p, expr);
  Element e = Element::Zero(16);
  const auto& basis = h_basis();
  for (const auto& [w, c] : x.terms) {
    auto it = std::find(basis.begin(), basis.end(), w);
    e(it - basis.begin()) = c;
  }
  return e;
}

std::vector<Mutation> h_relation_mutations() {
  const std::vector<std::pair<std::string, std::string>> swaps{
      {"rel: a*a -> 1", "rel: a*a -> -1"},     {"rel: b*b -> 1", "rel: b*b -> -1"},
      {"rel: c*c -> 1", "rel: c*c -> -1"},     {"rel: b*a -> a*b", "rel: b*a -> -a*b"},
      {"rel: c*a -> a*c", "rel: c*a -> -a*c"}, {"rel: c*b -> b*c", "rel: c*b -> -b*c"},
      {"rel: d*d -> a", "rel: d*d -> 1"},      {"rel: d*a -> a*d", "rel: d*a -> -a*d"},
      {"rel: d*b -> c*d", "rel: d*b -> b*d"},  {"rel: d*c -> b*d", "rel: d*c -> c*d"},
  };
  std::vector<Mutation> out;
  for (const auto& [from, to] : swaps) {
    std::string dsl = h_dsl();
    dsl.replace(dsl.find(from), from.size(), to);
    out.push_back({from.substr(5) + "  =>  " + to.substr(5), dsl});
  }
  return out;
}

// ------------------------------------------------------------------ automorphisms

TauImages tau_images(int k) {
  if (k < 1 || k > 32) throw CatalogError("tau index out of range: " + std::to_string(k));
  static const char* bc[4][2] = {{"b", "c"}, {"c", "b"}, {"a*b", "a*c"}, {"a*c", "a*b"}};
  static const char* d_low[4] = {"d", "d*a", "d*b*c", "d*a*b*c"};
  static const char* d_high[4] = {"(1/2)*((1+x) + (1-x)*b*c)*d", "(1/2)*((1-x) + (1+x)*b*c)*d",
                                  "(1/2)*((1+x) + (1-x)*b*c)*a*d", "(1/2)*((1-x) + (1+x)*b*c)*a*d"};
  int r = (k - 1) % 16;
  bool high = k > 16;
  return {high ? "a*b*c" : "a", bc[r / 4][0], bc[r / 4][1], high ? d_high[r % 4] : d_low[r % 4]};
}

Mat algebra_map(const TauImages& im) {
  const Presentation& p = h_presentation();
  std::vector<Poly> gens{parse_poly(p, im.a), parse_poly(p, im.b), parse_poly(p, im.c), parse_poly(p, im.d)};
  const auto& basis = h_basis();
  Mat f = Mat::Zero(16, 16);
  for (std::size_t j = 0; j < 16; ++j) {
    Poly acc(1);
    for (char ch : basis[j]) acc = p.normal_form(acc * gens[static_cast<std::size_t>(ch)]);
    for (const auto& [w, c] : acc.terms) {
      auto it = std::find(basis.begin(), basis.end(), w);
      f(it - basis.begin(), static_cast<Index>(j)) = c;
    }
  }
  return f;
}

Mat tau(int k) { return algebra_map(tau_images(k)); }

bool AutReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed || !c.required; });
}

AutReport automorphism_group_check() {
  AutReport rep;
  const HopfData& h = *H();
  std::vector<Mat> t(33);
  for (int k = 1; k <= 32; ++k) t[static_cast<std::size_t>(k)] = tau(k);
  const Mat id = Mat::Identity(16, 16);

  bool all_morph = true;
  std::string bad;
  for (int k = 1; k <= 32; ++k) {
    if (!check_hopf_morphism(h, h, t[static_cast<std::size_t>(k)]) || exact_rank(t[static_cast<std::size_t>(k)]) != 16) {
      all_morph = false;
      bad += " tau" + std::to_string(k);
    }
  }
  rep.checks.push_back({"each tau_k is a Hopf automorphism", all_morph, bad});

  std::set<int> distinct;
  auto find = [&](const Mat& m) -> int {
    for (int k = 1; k <= 32; ++k)
      if (t[static_cast<std::size_t>(k)] == m) return k;
    return 0;
  };
  for (int k = 1; k <= 32; ++k) distinct.insert(find(t[static_cast<std::size_t>(k)]));
  rep.checks.push_back({"the 32 maps are distinct", distinct.size() == 32, std::to_string(distinct.size())});

  bool closed = true;
  std::string miss;
  for (int i = 1; i <= 32 && closed; ++i)
    for (int j = 1; j <= 32 && closed; ++j)
      if (find(matmul(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)])) == 0) {
        closed = false;
        miss = "tau" + std::to_string(i) + " tau" + std::to_string(j);
      }
  rep.checks.push_back({"closed under composition", closed, miss});
  rep.order = closed ? distinct.size() : 0;
  rep.checks.push_back({"group order is 32", rep.order == 32, std::to_string(rep.order)});

  auto T = [&](int k) -> const Mat& { return t[static_cast<std::size_t>(k)]; };
  auto pw = [&](const Mat& m, int e) {
    Mat out = id;
    for (int i = 0; i < e; ++i) out = matmul(out, m);
    return out;
  };
  rep.checks.push_back({"tau1 = id", T(1) == id, {}});
  rep.checks.push_back({"tau2^2 = 1", pw(T(2), 2) == id, {}});
  rep.checks.push_back({"tau5^2 = 1", pw(T(5), 2) == id, {}});
  rep.checks.push_back({"tau9^2 = 1", pw(T(9), 2) == id, {}});
  rep.checks.push_back({"tau17^4 = 1", pw(T(17), 4) == id && pw(T(17), 2) != id, {}});
  rep.checks.push_back({"tau2 tau5 = tau5 tau2", matmul(T(2), T(5)) == matmul(T(5), T(2)), {}});
  rep.checks.push_back({"tau2 tau9 = tau9 tau2", matmul(T(2), T(9)) == matmul(T(9), T(2)), {}});
  // Listed with the group relations, but the table's tau2 and tau17
  // differ by bc on d; the central involution of the table is tau3.
  rep.checks.push_back({"tau2 tau17 = tau17 tau2", matmul(T(2), T(17)) == matmul(T(17), T(2)), {}, false});
  bool central = true;
  for (int k = 1; k <= 32; ++k) central = central && matmul(T(3), T(k)) == matmul(T(k), T(3));
  rep.checks.push_back({"tau3 is central", central, {}, false});
  rep.checks.push_back({"tau5 tau9 = tau9 tau5", matmul(T(5), T(9)) == matmul(T(9), T(5)), {}});
  Mat a = matmul(T(5), T(17));
  rep.checks.push_back({"tau5 tau17 = tau17 tau5 = tau9 tau17 tau9",
                        a == matmul(T(17), T(5)) && a == matmul(matmul(T(9), T(17)), T(9)), {}});

  // The four generators already produce the whole group.
  std::vector<Mat> closure{id};
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (int g : {2, 5, 9, 17}) {
      Mat m = matmul(closure[i], T(g));
      if (std::find(closure.begin(), closure.end(), m) == closure.end()) closure.push_back(m);
    }
  rep.checks.push_back({"generated by tau2, tau5, tau9, tau17", closure.size() == 32,
                        std::to_string(closure.size())});
  return rep;
}

// ------------------------------------------------------------------ modules

namespace {

Mat m2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

// delta(v_j) = sum over (element, i) of element (x) v_i
using CoSpec = std::vector<std::vector<std::pair<std::string, int>>>;

Mat coaction_matrix(const CoSpec& spec) {
  const auto d = static_cast<Index>(spec.size());
  Mat co = Mat::Zero(16 * d, d);
  for (Index j = 0; j < d; ++j)
    for (const auto& [expr, i] : spec[static_cast<std::size_t>(j)]) {
      Element e = h_element(expr);
      for (Index g = 0; g < 16; ++g) co(g * d + i, j) += e(g);
    }
  return co;
}

struct Action2 {
  Mat a, b, c, d;
};

YDModule make2(const std::string& name, const Action2& act, const CoSpec& co) {
  return build_yd(H(), {{"a", act.a}, {"b", act.b}, {"c", act.c}, {"d", act.d}}, coaction_matrix(co), name);
}

CoSpec grouplike2(const std::string& g1, const std::string& g2) { return {{{g1, 0}}, {{g2, 1}}}; }

const CoSpec& co13() {
  static const CoSpec s{{{"(1/2)*a*(b+c)*d", 0}, {"(1/2)*a*(b-c)*d", 1}},
                        {{"(1/2)*(b+c)*d", 1}, {"(1/2)*(b-c)*d", 0}}};
  return s;
}
const CoSpec& co14() {
  static const CoSpec s{{{"(1/2)*(b+c)*d", 0}, {"(1/2)*(b-c)*d", 1}},
                        {{"(1/2)*a*(b+c)*d", 1}, {"(1/2)*a*(b-c)*d", 0}}};
  return s;
}
const CoSpec& co15() {
  static const CoSpec s{{{"(1/2)*a*(1+b*c)*d", 0}, {"(1/2)*a*(1-b*c)*d", 1}},
                        {{"(1/2)*(1+b*c)*d", 1}, {"(1/2)*(1-b*c)*d", 0}}};
  return s;
}
const CoSpec& co16() {
  static const CoSpec s{{{"(1/2)*(1+b*c)*d", 0}, {"(1/2)*(1-b*c)*d", 1}},
                        {{"(1/2)*a*(1+b*c)*d", 1}, {"(1/2)*a*(1-b*c)*d", 0}}};
  return s;
}

}  // namespace

YDModule V(int i) {
  static const int chi[8][4] = {{1, 1, 0, 0}, {1, 3, 0, 0}, {1, 1, 1, 0}, {1, 3, 1, 0},
                                {0, 1, 0, 1}, {0, 3, 0, 1}, {0, 1, 1, 1}, {0, 3, 1, 1}};
  if (i < 1 || i > 8) throw CatalogError("no module V" + std::to_string(i));
  const int* p = chi[i - 1];
  const int ii = p[0], j = p[1], k = p[2], l = p[3];
  auto sign = [](int e) { return Scalar(e % 2 == 0 ? 1 : -1); };
  auto one = [](const Scalar& s) {
    Mat m(1, 1);
    m << s;
    return m;
  };
  // d.v = x^{-j} v
  Scalar dval = pow(Scalar::xi(), static_cast<unsigned>((4 - j % 4) % 4));
  std::string g;
  auto append = [&g](const char* letter, int e) {
    if (e % 2) g += std::string(g.empty() ? "" : "*") + letter;
  };
  append("a", ii);
  append("b", j + k);
  append("c", k);
  if (g.empty()) g = "1";
  return build_yd(H(), {{"a", one(sign(j))}, {"b", one(sign(l))}, {"c", one(sign(l))}, {"d", one(dval)}},
                  coaction_matrix({{{g, 0}}}), "V" + std::to_string(i));
}

YDModule M(int j) {
  const Scalar o(1), z(0), m(-1);
  const Mat I = m2(o, z, z, o);
  const Mat N = m2(m, z, z, m);
  const Mat P = m2(o, z, z, m);   // diag(1, -1)
  const Mat Q = m2(m, z, z, o);   // diag(-1, 1)
  const Mat swap = m2(z, o, o, z);
  const Mat rot = m2(z, m, o, z);   // [[0,-1],[1,0]]
  const Mat rot2 = m2(z, o, m, z);  // [[0,1],[-1,0]]
  const Action2 act1{I, N, N, swap};
  const Action2 act3{I, P, Q, swap};
  const Action2 act5{I, Q, P, swap};
  const Action2 act9{N, P, Q, rot2};
  const Action2 act11{N, Q, P, rot2};
  const Action2 act13{I, Q, Q, P};
  const Action2 act15{I, P, P, N};
  const Action2 act17{I, P, Q, m2(z, m, m, z)};
  const std::string name = "M" + std::to_string(j);
  switch (j) {
    case 1: return make2(name, act1, grouplike2("b", "c"));
    case 2: return make2(name, act1, grouplike2("a*b", "a*c"));
    case 3: return make2(name, act3, grouplike2("b*c", "a*b*c"));
    case 4: return make2(name, act3, grouplike2("c", "a*b"));
    case 5: return make2(name, act5, grouplike2("b*c", "a*b*c"));
    case 6: return make2(name, act5, grouplike2("b", "a*c"));
    case 7: return make2(name, {N, I, I, rot}, grouplike2("a", "a*b*c"));
    case 8: return make2(name, {N, N, N, rot}, grouplike2("a", "a*b*c"));
    case 9: return make2(name, act9, grouplike2("c", "a*c"));
    case 10: return make2(name, act9, grouplike2("b*c", "a"));
    case 11: return make2(name, act11, grouplike2("b", "a*b"));
    case 12: return make2(name, act11, grouplike2("b*c", "a"));
    case 13: return make2(name, act13, co13());
    case 14: return make2(name, act13, co14());
    case 15: return make2(name, act15, co15());
    case 16: return make2(name, act15, co16());
    case 17: return make2(name, act17, co15());
    case 18: return make2(name, act17, co16());
    case 19: return make2(name, {N, P, Q, rot2}, co15());
    case 20: return make2(name, {N, Q, P, rot2}, co15());
    default: throw CatalogError("no module " + name);
  }
}

YDModule trivial_module() {
  Mat one = Mat::Identity(1, 1);
  return build_yd(H(), {{"a", one}, {"b", one}, {"c", one}, {"d", one}}, coaction_matrix({{{"1", 0}}}), "trivial");
}

YDModule simple(const std::string& name) {
  if (name == "trivial") return trivial_module();
  if (name.size() >= 2 && (name[0] == 'V' || name[0] == 'M')) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) k = 0;
    } catch (const std::exception&) {
      k = 0;
    }
    if (name[0] == 'V' && k >= 1 && k <= 8) return V(k);
    if (name[0] == 'M' && k >= 1 && k <= 20) return M(k);
  }
  throw CatalogError("unknown module " + name);
}

std::vector<std::string> simple_names() {
  std::vector<std::string> out;
  for (int i = 1; i <= 8; ++i) out.push_back("V" + std::to_string(i));
  for (int j = 1; j <= 20; ++j) out.push_back("M" + std::to_string(j));
  return out;
}

// ------------------------------------------------------------------ Omega

namespace {

std::vector<OmegaInfo> build_omegas() {
  std::vector<OmegaInfo> out;
  out.push_back({1, {"V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8"}, {}, 0});
  const std::vector<std::pair<std::vector<std::string>, std::string>> four{
      {{"V5", "V6", "V7", "V8"}, "M1"},  {{"V1", "V2", "V3", "V4"}, "M2"},  {{"V1", "V2", "V5", "V6"}, "M3"},
      {{"V1", "V2", "V7", "V8"}, "M4"},  {{"V3", "V4", "V7", "V8"}, "M5"},  {{"V3", "V4", "V5", "V6"}, "M6"},
      {{"V1", "V2", "V3", "V4"}, "M7"},  {{"V5", "V6", "V7", "V8"}, "M8"},  {{"V3", "V4", "V7", "V8"}, "M9"},
      {{"V3", "V4", "V5", "V6"}, "M10"}, {{"V1", "V2", "V5", "V6"}, "M11"}, {{"V1", "V2", "V7", "V8"}, "M12"}};
  for (std::size_t i = 0; i < four.size(); ++i)
    out.push_back({static_cast<int>(i) + 2, four[i].first, {four[i].second}, 0});
  const std::vector<std::tuple<int, int, int>> b14{{14, 1, 1},   {15, 1, 2},   {16, 1, 7},   {19, 3, 3},
                                                   {20, 3, 5},   {21, 3, 9},   {22, 4, 4},   {23, 4, 6},
                                                   {29, 7, 7},   {30, 7, 8},   {38, 13, 13}, {39, 13, 14},
                                                   {41, 15, 15}, {42, 15, 16}, {44, 17, 17}, {45, 17, 18}};
  const std::vector<std::tuple<int, int, int>> b15{
      {17, 2, 2},   {18, 2, 8},   {24, 4, 10},  {25, 5, 5},   {26, 5, 11},  {27, 6, 6},   {28, 6, 12},
      {31, 8, 8},   {32, 9, 9},   {33, 9, 11},  {34, 10, 10}, {35, 10, 12}, {36, 11, 11}, {37, 12, 12},
      {40, 14, 14}, {43, 16, 16}, {46, 18, 18}, {47, 19, 19}, {48, 19, 20}, {49, 20, 20}};
  auto mname = [](int k) { return "M" + std::to_string(k); };
  for (const auto& [idx, x, y] : b14) out.push_back({idx, {}, {mname(x), mname(y)}, 14});
  for (const auto& [idx, x, y] : b15) out.push_back({idx, {}, {mname(x), mname(y)}, 15});
  std::sort(out.begin(), out.end(), [](const OmegaInfo& l, const OmegaInfo& r) { return l.index < r.index; });
  return out;
}

}  // namespace

const OmegaInfo& omega_info(int index) {
  static const std::vector<OmegaInfo> all = build_omegas();
  if (index < 1 || index > 49) throw CatalogError("no Omega_" + std::to_string(index));
  return all[static_cast<std::size_t>(index - 1)];
}

YDModule omega(int index, const std::vector<int>& n) {
  const OmegaInfo& info = omega_info(index);
  std::vector<int> mult = n;
  if (mult.empty()) mult.assign(info.multiplied.size(), 1);
  if (!info.multiplied.empty() && mult.size() != info.multiplied.size())
    throw CatalogError("Omega_" + std::to_string(index) + " takes " + std::to_string(info.multiplied.size()) +
                       " multiplicities");
  if (info.multiplied.empty() && !n.empty()) throw CatalogError("Omega_" + std::to_string(index) + " takes no multiplicities");
  int total = 0;
  for (int k : mult) {
    if (k < 0) throw CatalogError("multiplicities must be non-negative");
    total += k;
  }
  if (index == 1 && total < 1) throw CatalogError("Omega_1 requires at least one summand (sum of n_j >= 1)");
  std::vector<YDModule> parts;
  for (std::size_t i = 0; i < info.multiplied.size(); ++i)
    for (int r = 0; r < mult[i]; ++r) parts.push_back(simple(info.multiplied[i]));
  for (const auto& f : info.fixed) parts.push_back(simple(f));
  YDModule out = direct_sum(parts);
  out.set_name("Omega_" + std::to_string(index));
  return out;
}

const std::vector<std::pair<int, int>>& same_series_pairs() {
  static const std::vector<std::pair<int, int>> pairs{
      {2, 3},   {4, 6},   {5, 7},   {8, 9},   {10, 12}, {11, 13}, {4, 11},  {5, 10},  {14, 17}, {16, 18}, {19, 25},
      {21, 26}, {22, 27}, {24, 28}, {29, 31}, {32, 36}, {34, 37}, {38, 40}, {41, 43}, {44, 46}, {47, 49}, {21, 24},
      {22, 32}, {23, 33}, {19, 34}, {20, 35}, {44, 47}, {45, 48}};
  return pairs;
}

std::vector<std::pair<std::string, std::string>> involutive_cases() {
  std::vector<std::pair<std::string, std::string>> out;
  auto v = [](int i) { return "V" + std::to_string(i); };
  auto m = [](int i) { return "M" + std::to_string(i); };
  for (int i = 1; i <= 8; ++i)
    for (int j = i; j <= 8; ++j) out.emplace_back(v(i), v(j));
  auto cross = [&](std::vector<int> vs, std::vector<int> ms) {
    for (int i : vs)
      for (int j : ms) out.emplace_back(v(i), m(j));
  };
  cross({5, 6, 7, 8}, {1, 8});
  cross({1, 2, 3, 4}, {2, 7});
  cross({1, 2, 5, 6}, {3, 11});
  cross({1, 2, 7, 8}, {4, 12});
  cross({3, 4, 7, 8}, {5, 9});
  cross({3, 4, 5, 6}, {6, 10});
  auto mm = [&](std::vector<int> xs, std::vector<int> ys) {
    for (int x : xs)
      for (int y : ys) out.emplace_back(m(x), m(y));
  };
  mm({1}, {2, 7});
  mm({3, 11}, {5, 9});
  mm({4, 12}, {6, 10});
  for (auto [x, y] : std::vector<std::pair<int, int>>{{2, 8}, {7, 8}, {13, 14}, {15, 16}, {17, 18}, {19, 20}})
    out.emplace_back(m(x), m(y));
  for (int i = 1; i <= 20; ++i) out.emplace_back(m(i), m(i));
  return out;
}

}  // namespace hopflift::catalog
