#include <numeric>
#include <sstream>

#include "hopflift/catalog.hpp"

namespace hopflift::catalog {

// ------------------------------------------------------------------ ParamSet

Scalar ParamSet::scalar(const std::string& name) const {
  const Mat& m = matrix(name);
  if (m.rows() != 1 || m.cols() != 1) throw CatalogError("parameter " + name + " is not a scalar");
  return m(0, 0);
}

const Mat& ParamSet::matrix(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw CatalogError("missing parameter " + name);
  return it->second;
}

void ParamSet::set(const std::string& name, const Scalar& s) {
  Mat m(1, 1);
  m(0, 0) = s;
  values[name] = std::move(m);
}

// ------------------------------------------------------------------ family table

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> all = {
      {"U1", 1, 8, {"lambda", "mu", "nu", "gamma"}},
      {"U2", 2, 4, {"nu", "gamma", "lambda"}},
      {"U9", 9, 4, {"nu", "gamma", "lambda", "mu", "alpha", "beta"}},
      {"U14", 14, 0, {"lambda", "mu", "alpha"}},
      {"U15", 15, 0, {"lambda", "mu", "alpha", "nu"}},
      {"U16", 16, 0, {"lambda"}},
      {"U20", 20, 0, {"lambda"}},
      {"U23", 23, 0, {"lambda"}},
      {"U29", 29, 0, {"lambda"}},
      {"U38", 38, 0, {"lambda", "mu", "alpha"}},
      {"U39", 39, 0, {"lambda", "mu", "alpha"}},
      {"U41", 41, 0, {"lambda", "mu", "alpha"}},
      {"U42", 42, 0, {"lambda", "mu", "alpha"}},
      {"U44", 44, 0, {"lambda", "mu", "alpha"}},
      {"U45", 45, 0, {"lambda", "mu"}},
  };
  return all;
}

const FamilyInfo& family(const std::string& name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw CatalogError("unknown family " + name);
}

std::vector<int> default_n(const FamilyInfo& f) { return std::vector<int>(f.n_count, 1); }

namespace {

void check_n(const FamilyInfo& f, const std::vector<int>& n) {
  if (n.size() != f.n_count)
    throw CatalogError(f.name + " takes " + std::to_string(f.n_count) + " multiplicities, got " +
                       std::to_string(n.size()));
  for (int v : n)
    if (v < 0) throw CatalogError("multiplicities must be nonnegative");
  if (f.name == "U1" && std::accumulate(n.begin(), n.end(), 0) < 1)
    throw CatalogError("U1 requires at least one generator (sum of n_i >= 1)");
}

// Row and column counts of each parameter.
std::map<std::string, std::pair<int, int>> shapes(const FamilyInfo& f, const std::vector<int>& n) {
  check_n(f, n);
  if (f.name == "U1")
    return {{"lambda", {n[0], n[3]}}, {"mu", {n[1], n[2]}}, {"nu", {n[4], n[7]}}, {"gamma", {n[5], n[6]}}};
  if (f.name == "U2") return {{"nu", {n[0], n[3]}}, {"gamma", {n[1], n[2]}}, {"lambda", {1, 1}}};
  if (f.name == "U9")
    return {{"nu", {n[0], n[3]}},   {"gamma", {n[1], n[2]}}, {"lambda", {n[0], 1}},
            {"mu", {n[1], 1}},      {"alpha", {n[2], 1}},    {"beta", {n[3], 1}}};
  std::map<std::string, std::pair<int, int>> out;
  for (const auto& p : f.params) out[p] = {1, 1};
  return out;
}

}  // namespace

ParamSet zero_params(const FamilyInfo& f, const std::vector<int>& n) {
  ParamSet out;
  for (const auto& [name, rc] : shapes(f, n)) out.set(name, Mat(Mat::Zero(rc.first, rc.second)));
  return out;
}

ParamSet sample_params(const FamilyInfo& f, const std::vector<int>& n, int seed) {
  static const char* pool[] = {"1", "2", "-1", "1/2", "x", "1+x", "-3", "2-x", "-1/3", "3*x"};
  constexpr int pool_size = 10;
  ParamSet out = zero_params(f, n);
  int k = seed;
  for (auto& [name, m] : out.values)
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) m(i, j) = Scalar::parse(pool[((k++) % pool_size + pool_size) % pool_size]);
  return out;
}

std::size_t expected_dimension(const std::string& name, const std::vector<int>& n) {
  const FamilyInfo& f = family(name);
  check_n(f, n);
  const int sum = std::accumulate(n.begin(), n.end(), 0);
  if (name == "U1") return std::size_t{1} << (4 + sum);
  if (name == "U2" || name == "U9") return std::size_t{1} << (6 + sum);
  return 256;
}

// ------------------------------------------------------------------ DSL generation

namespace {

// A module letter with its commutation against a, b, c (+1 or -1), the image
// of d*X and its coproduct.
struct ModGen {
  std::string name;
  int sa, sb, sc;
  std::string d_times;  // right-hand side of d*X
  std::string coprod;   // right-hand side of Delta(X)
};

class Dsl {
 public:
  void gen(ModGen g) { gens_.push_back(std::move(g)); }
  void param(const std::string& name, const Scalar& v) { params_ << "param " << name << " = " << v.str() << "\n"; }
  void eq(const std::string& lhs, const std::string& rhs) { eqs_ << "eq: " << lhs << " = " << rhs << "\n"; }
  // X*Y + Y*X = rhs
  void anti(const std::string& x, const std::string& y, const std::string& rhs = "0") {
    eq(x + "*" + y + " + " + y + "*" + x, rhs);
  }
  // X*Y - Y*X = 0
  void comm(const std::string& x, const std::string& y) { eq(x + "*" + y + " - " + y + "*" + x, "0"); }

  std::string str() const {
    std::ostringstream out;
    out << "gens: a b c d |";
    for (const auto& g : gens_) out << " " << g.name;
    out << "\n" << params_.str();
    // H: everything after the generator line
    std::string h = h_dsl();
    out << h.substr(h.find('\n') + 1);
    auto sign = [](int s) { return s > 0 ? "" : "-"; };
    for (const auto& g : gens_) {
      out << "eq: a*" << g.name << " = " << sign(g.sa) << g.name << "*a\n";
      out << "eq: b*" << g.name << " = " << sign(g.sb) << g.name << "*b\n";
      out << "eq: c*" << g.name << " = " << sign(g.sc) << g.name << "*c\n";
      out << "eq: d*" << g.name << " = " << g.d_times << "\n";
    }
    out << eqs_.str();
    for (const auto& g : gens_) {
      out << "coprod: " << g.name << " = " << g.coprod << "\n";
      out << "counit: " << g.name << " = 0\n";
    }
    return out.str();
  }

 private:
  std::vector<ModGen> gens_;
  std::ostringstream params_;
  std::ostringstream eqs_;
};

std::string skew(const std::string& x, const std::string& g) { return x + " @ 1 + " + g + " @ " + x; }

// Name of entry (i, j) of a parameter matrix; scalars keep the bare name.
std::string pname(const std::string& p, const Mat& m, Index i, Index j) {
  if (m.rows() == 1 && m.cols() == 1) return p;
  std::string s = p + "_" + std::to_string(i + 1);
  if (m.cols() > 1 || m.rows() == 1) s += "_" + std::to_string(j + 1);
  return s;
}

void declare(Dsl& dsl, const std::string& p, const Mat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) dsl.param(pname(p, m, i, j), m(i, j));
}

void check_shapes(const FamilyInfo& f, const std::vector<int>& n, const ParamSet& ps) {
  for (const auto& [name, rc] : shapes(f, n)) {
    const Mat& m = ps.matrix(name);
    if (m.rows() != rc.first || m.cols() != rc.second)
      throw CatalogError(f.name + ": parameter " + name + " must be " + std::to_string(rc.first) + "x" +
                         std::to_string(rc.second));
  }
}

// The eight one-dimensional classes, V1..V8 as A..H.
struct ClassInfo {
  char letter;
  int sa, sb, sc;
  const char* dchar;  // d*X = dchar*X*d
  const char* group;  // Delta(X) = X @ 1 + group @ X
};
const ClassInfo kClasses[8] = {
    {'A', -1, 1, 1, "-x", "a*b"}, {'B', -1, 1, 1, "x", "a*b"},  {'C', -1, 1, 1, "-x", "a*c"},
    {'D', -1, 1, 1, "x", "a*c"},  {'E', -1, -1, -1, "-x", "b"}, {'F', -1, -1, -1, "x", "b"},
    {'G', -1, -1, -1, "-x", "c"}, {'H', -1, -1, -1, "x", "c"},
};

std::string cname(int cls, int i) { return std::string(1, kClasses[cls].letter) + std::to_string(i + 1); }

// Classes cls with multiplicities counts[cls] (absent classes have count 0).
void add_classes(Dsl& dsl, const std::vector<int>& counts) {
  for (int cls = 0; cls < 8; ++cls)
    for (int i = 0; i < counts[static_cast<std::size_t>(cls)]; ++i) {
      const ClassInfo& ci = kClasses[cls];
      std::string x = cname(cls, i);
      dsl.gen({x, ci.sa, ci.sb, ci.sc, std::string(ci.dchar) + "*" + x + "*d", skew(x, ci.group)});
    }
}

// Relations among the one-dimensional classes: skew-symmetric squares,
// the four linked pairs and the signed cross relations.
void class_relations(Dsl& dsl, const std::vector<int>& counts, const ParamSet& ps) {
  auto cnt = [&](int cls) { return counts[static_cast<std::size_t>(cls)]; };
  for (int cls = 0; cls < 8; ++cls)
    for (int i = 0; i < cnt(cls); ++i)
      for (int j = i; j < cnt(cls); ++j) dsl.anti(cname(cls, i), cname(cls, j));
  struct Link {
    int x, y;
    const char* param;
  };
  const Link links[4] = {{0, 3, "lambda"}, {1, 2, "mu"}, {4, 7, "nu"}, {5, 6, "gamma"}};
  for (const auto& l : links) {
    if (cnt(l.x) == 0 || cnt(l.y) == 0) continue;
    const Mat& m = ps.matrix(l.param);
    for (int i = 0; i < cnt(l.x); ++i)
      for (int j = 0; j < cnt(l.y); ++j)
        dsl.anti(cname(l.x, i), cname(l.y, j), pname(l.param, m, i, j) + "*(1 - b*c)");
  }
  // anticommuting unlinked pairs inside {A..D} and inside {E..H}
  const std::pair<int, int> anti[8] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
  for (const auto& [x, y] : anti)
    for (int i = 0; i < cnt(x); ++i)
      for (int j = 0; j < cnt(y); ++j) dsl.anti(cname(x, i), cname(y, j));
  for (int x = 0; x < 4; ++x)
    for (int y = 4; y < 8; ++y)
      for (int i = 0; i < cnt(x); ++i)
        for (int j = 0; j < cnt(y); ++j) dsl.comm(cname(x, i), cname(y, j));
}

std::vector<std::string> class_letters(const std::vector<int>& counts) {
  std::vector<std::string> out;
  for (int cls = 0; cls < 8; ++cls)
    for (int i = 0; i < counts[static_cast<std::size_t>(cls)]; ++i) out.push_back(cname(cls, i));
  return out;
}

// M1-type pair: a+, b-, c-, d*p1 = p2*d, d*p2 = p1*d.
void m1_pair(Dsl& dsl, const std::string& x1, const std::string& x2, const char* g1, const char* g2) {
  dsl.gen({x1, 1, -1, -1, x2 + "*d", skew(x1, g1)});
  dsl.gen({x2, 1, -1, -1, x1 + "*d", skew(x2, g2)});
}

// M7/M8-type pair with d*x1 = x2*d, d*x2 = -x1*d.
void rot_pair(Dsl& dsl, const std::string& x1, const std::string& x2, int sa, int sbc) {
  dsl.gen({x1, sa, sbc, sbc, x2 + "*d", skew(x1, "a")});
  dsl.gen({x2, sa, sbc, sbc, "-" + x1 + "*d", skew(x2, "a*b*c")});
}

// M3..M6-type pair: the letters swap under d up to a.
void swap_a_pair(Dsl& dsl, const std::string& x1, const std::string& x2, int sb1, const char* g1, const char* g2) {
  dsl.gen({x1, 1, sb1, -sb1, x2 + "*a*d", skew(x1, g1)});
  dsl.gen({x2, 1, -sb1, sb1, x1 + "*a*d", skew(x2, g2)});
}

// M13/M14 and M15/M16 coproducts: x1 (x) 1 + 1/2 g(u+v)d (x) x1 + 1/2 g(u-v)d (x) x2.
std::string mat_coprod(const std::string& x, const std::string& other, const std::string& g, const std::string& u,
                       const std::string& v) {
  std::string pre = g.empty() ? "" : g + "*";
  return x + " @ 1 + (1/2)*" + pre + "(" + u + " + " + v + ")*d @ " + x + " + (1/2)*" + pre + "(" + u + " - " + v +
         ")*d @ " + other;
}

// Diagonal action: x_i commutes with a, has sign s_i against b and c and
// d*x_i = e_i*x_i*d.
void diag_pair(Dsl& dsl, const std::string& x1, const std::string& x2, int s1, int s2, int e1, int e2,
               const std::string& u, const std::string& v, bool a_first) {
  auto sign = [](int e) { return std::string(e > 0 ? "" : "-"); };
  dsl.gen({x1, 1, s1, s1, sign(e1) + x1 + "*d", mat_coprod(x1, x2, a_first ? "a" : "", u, v)});
  dsl.gen({x2, 1, s2, s2, sign(e2) + x2 + "*d", mat_coprod(x2, x1, a_first ? "" : "a", u, v)});
}

// M17/M18-type: d*x1 = -x2*a*d, d*x2 = -x1*a*d.
void m17_pair(Dsl& dsl, const std::string& x1, const std::string& x2, bool a_first) {
  dsl.gen({x1, 1, 1, -1, "-" + x2 + "*a*d", mat_coprod(x1, x2, a_first ? "a" : "", "1", "b*c")});
  dsl.gen({x2, 1, -1, 1, "-" + x1 + "*a*d", mat_coprod(x2, x1, a_first ? "" : "a", "1", "b*c")});
}

}  // namespace

std::string lifting_dsl(const std::string& name, const std::vector<int>& n, const ParamSet& ps) {
  const FamilyInfo& f = family(name);
  check_shapes(f, n, ps);
  Dsl dsl;
  for (const auto& p : f.params) declare(dsl, p, ps.matrix(p));

  if (name == "U1") {
    add_classes(dsl, n);
    class_relations(dsl, n, ps);
    return dsl.str();
  }
  if (name == "U2" || name == "U9") {
    const std::vector<int> counts{0, 0, 0, 0, n[0], n[1], n[2], n[3]};
    if (name == "U2") {
      m1_pair(dsl, "p1", "p2", "b", "c");
      dsl.anti("p1", "p1");
      dsl.anti("p2", "p2");
      dsl.anti("p1", "p2", "lambda*(1 - b*c)");
    } else {
      rot_pair(dsl, "p1", "p2", -1, -1);
      dsl.anti("p1", "p1");
      dsl.anti("p2", "p2");
      dsl.anti("p1", "p2");
    }
    add_classes(dsl, counts);
    class_relations(dsl, counts, ps);
    for (const auto& x : class_letters(counts)) {
      if (name == "U2") {
        dsl.anti("p1", x);
        dsl.anti("p2", x);
        continue;
      }
      // U9: p1 X + X p1 = k (1 - g), p2 X + X p2 = s k (1 - g')
      const char cls = x[0];
      const int i = std::stoi(x.substr(1)) - 1;
      const char* param = cls == 'E' ? "lambda" : cls == 'F' ? "mu" : cls == 'G' ? "alpha" : "beta";
      const std::string k = pname(param, ps.matrix(param), i, 0);
      const bool ab_first = cls == 'E' || cls == 'F';
      const std::string g1 = ab_first ? "(1 - a*b)" : "(1 - a*c)";
      const std::string g2 = ab_first ? "(1 - a*c)" : "(1 - a*b)";
      const std::string s = (cls == 'E' || cls == 'G') ? "x*" : "-x*";
      dsl.anti("p1", x, k + "*" + g1);
      dsl.anti("p2", x, s + k + "*" + g2);
    }
    return dsl.str();
  }
  auto squares_zero = [&](const char* x1, const char* x2, const char* rhs = "0") {
    dsl.anti(x1, x1);
    dsl.anti(x2, x2);
    dsl.anti(x1, x2, rhs);
  };
  if (name == "U14" || name == "U15") {
    m1_pair(dsl, "p1", "p2", "b", "c");
    if (name == "U14")
      m1_pair(dsl, "q1", "q2", "b", "c");
    else
      m1_pair(dsl, "q1", "q2", "a*b", "a*c");
    squares_zero("p1", "p2", "lambda*(1 - b*c)");
    squares_zero("q1", "q2", "mu*(1 - b*c)");
    if (name == "U14") {
      dsl.anti("p1", "q1");
      dsl.anti("p2", "q2");
      dsl.anti("p1", "q2", "alpha*(1 - b*c)");
      dsl.anti("p2", "q1", "alpha*(1 - b*c)");
    } else {
      dsl.anti("p1", "q1", "nu*(1 - a)");
      dsl.anti("p2", "q2", "nu*(1 - a)");
      dsl.anti("p1", "q2", "alpha*(1 - a*b*c)");
      dsl.anti("p2", "q1", "alpha*(1 - a*b*c)");
    }
    return dsl.str();
  }
  if (name == "U16") {
    m1_pair(dsl, "p1", "p2", "b", "c");
    rot_pair(dsl, "q1", "q2", -1, 1);
    squares_zero("p1", "p2", "lambda*(1 - b*c)");
    squares_zero("q1", "q2");
    for (const char* p : {"p1", "p2"})
      for (const char* q : {"q1", "q2"}) dsl.comm(p, q);
    return dsl.str();
  }
  if (name == "U20" || name == "U23") {
    if (name == "U20") {
      swap_a_pair(dsl, "p1", "p2", 1, "b*c", "a*b*c");
      swap_a_pair(dsl, "q1", "q2", -1, "b*c", "a*b*c");
      squares_zero("p1", "p2");
      squares_zero("q1", "q2");
      dsl.anti("p1", "q1");
      dsl.anti("p2", "q2");
    } else {
      swap_a_pair(dsl, "p1", "p2", 1, "c", "a*b");
      swap_a_pair(dsl, "q1", "q2", -1, "b", "a*c");
      dsl.anti("p1", "p1");
      dsl.anti("p2", "p2");
      dsl.comm("p1", "p2");
      dsl.anti("q1", "q1");
      dsl.anti("q2", "q2");
      dsl.comm("q1", "q2");
      dsl.comm("p1", "q1");
      dsl.comm("p2", "q2");
    }
    dsl.anti("p1", "q2", "lambda*(1 - a)");
    dsl.anti("p2", "q1", "lambda*(1 - a)");
    return dsl.str();
  }
  if (name == "U29") {
    rot_pair(dsl, "p1", "p2", -1, 1);
    rot_pair(dsl, "q1", "q2", -1, 1);
    squares_zero("p1", "p2");
    squares_zero("q1", "q2");
    dsl.anti("p1", "q1");
    dsl.anti("p2", "q2");
    dsl.anti("p1", "q2", "lambda*(1 - b*c)");
    dsl.anti("p2", "q1", "-lambda*(1 - b*c)");
    return dsl.str();
  }
  if (name == "U38" || name == "U39") {
    diag_pair(dsl, "p1", "p2", -1, 1, 1, -1, "b", "c", true);
    diag_pair(dsl, "q1", "q2", -1, 1, 1, -1, "b", "c", name == "U38");
    dsl.anti("p1", "p1", "2*lambda*(a*b*c + a - 2)");
    dsl.anti("p2", "p2", "2*lambda*(a*b*c - a)");
    dsl.anti("p1", "p2");
    dsl.anti("q1", "q1", "2*mu*(a*b*c + a - 2)");
    dsl.anti("q2", "q2", "2*mu*(a*b*c - a)");
    dsl.anti("q1", "q2");
    if (name == "U38") {
      dsl.anti("p1", "q1", "alpha*(a*b*c + a - 2)");
      dsl.anti("p2", "q2", "alpha*(a*b*c - a)");
    } else {
      dsl.anti("p1", "q1", "alpha*(1 - b*c)");
      dsl.anti("p2", "q2", "alpha*(1 - b*c)");
    }
    dsl.anti("p1", "q2");
    dsl.anti("p2", "q1");
    return dsl.str();
  }
  if (name == "U41" || name == "U42") {
    diag_pair(dsl, "p1", "p2", 1, -1, -1, -1, "1", "b*c", true);
    diag_pair(dsl, "q1", "q2", 1, -1, -1, -1, "1", "b*c", name == "U41");
    dsl.anti("p1", "p1", "2*lambda*(a*b*c + a - 2)");
    dsl.anti("p2", "p2", "2*lambda*(a - a*b*c)");
    dsl.anti("p1", "p2");
    dsl.anti("q1", "q1", "2*mu*(a*b*c + a - 2)");
    dsl.anti("q2", "q2", "2*mu*(a - a*b*c)");
    dsl.anti("q1", "q2");
    if (name == "U41") {
      dsl.anti("p1", "q1", "alpha*(a*b*c + a - 2)");
      dsl.anti("p2", "q2", "alpha*(a - a*b*c)");
    } else {
      dsl.anti("p1", "q1", "alpha*(1 - b*c)");
      dsl.anti("p2", "q2", "-alpha*(1 - b*c)");
    }
    dsl.anti("p1", "q2");
    dsl.anti("p2", "q1");
    return dsl.str();
  }
  if (name == "U44" || name == "U45") {
    m17_pair(dsl, "p1", "p2", true);
    m17_pair(dsl, "q1", "q2", name == "U44");
    for (const char* x : {"p", "q"}) {
      const std::string x1 = std::string(x) + "1", x2 = std::string(x) + "2";
      const std::string k = std::string(x) == "p" ? "lambda" : "mu";
      dsl.eq(x1 + "*" + x2, "0");
      dsl.eq(x2 + "*" + x1, "0");
      dsl.eq(x1 + "*" + x1 + " + " + x2 + "*" + x2, k + "*(1 - a)");
      // Consequences of the three relations above; the rewriting system
      // needs them explicitly to close the overlaps x2*x2*x1 and x1*x2*x2.
      dsl.eq(x1 + "*" + x1 + "*" + x1, k + "*(" + x1 + " - " + x1 + "*a)");
    }
    const std::string alpha = name == "U44" ? "alpha*(1 - a)" : "0";
    dsl.eq("p1*q1 + q1*p1 + p2*q2 + q2*p2", alpha);
    dsl.eq("p1*q1 - q1*p1 - p2*q2 + q2*p2", "0");
    dsl.eq("p1*q2 + q2*p1 + p2*q1 + q1*p2", "0");
    dsl.eq("p1*q2 - q2*p1 - p2*q1 + q1*p2", "0");
    return dsl.str();
  }
  throw CatalogError("no presentation for " + name);
}

Presentation lifting(const std::string& name, const std::vector<int>& n, const ParamSet& params) {
  return parse_presentation(lifting_dsl(name, n, params));
}

}  // namespace hopflift::catalog
