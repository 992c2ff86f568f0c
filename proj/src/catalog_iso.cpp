#include <algorithm>
#include <random>
#include <sstream>

#include "hopflift/catalog.hpp"
#include "hopflift/linalg.hpp"

namespace hopflift::catalog {

const Mat& IsoWitness::matrix(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw CatalogError("witness has no entry " + name);
  return it->second;
}

Scalar IsoWitness::scalar(const std::string& name) const {
  const Mat& m = matrix(name);
  if (m.rows() != 1 || m.cols() != 1) throw CatalogError("witness entry " + name + " is not a scalar");
  return m(0, 0);
}

namespace {

// How tau_k transports a simple module: the image module, whether the two
// basis vectors trade places, and the coefficients of the images.
// Entries are "target[~]:c1:c2" for k = 1..32; one-dimensional rows list only
// the target. Found by checking every candidate map on the rank-one
// bosonizations.
const std::map<std::string, std::string>& twist_rows() {
  static const std::map<std::string, std::string> rows{
      {"V1", "V1 V2 V1 V2 V3 V4 V3 V4 V5 V6 V5 V6 V7 V8 V7 V8 V3 V3 V4 V4 V1 V1 V2 V2 V7 V7 V8 V8 V5 V5 V6 V6"},
      {"V2", "V2 V1 V2 V1 V4 V3 V4 V3 V6 V5 V6 V5 V8 V7 V8 V7 V4 V4 V3 V3 V2 V2 V1 V1 V8 V8 V7 V7 V6 V6 V5 V5"},
      {"V3", "V3 V4 V3 V4 V1 V2 V1 V2 V7 V8 V7 V8 V5 V6 V5 V6 V1 V1 V2 V2 V3 V3 V4 V4 V5 V5 V6 V6 V7 V7 V8 V8"},
      {"V4", "V4 V3 V4 V3 V2 V1 V2 V1 V8 V7 V8 V7 V6 V5 V6 V5 V2 V2 V1 V1 V4 V4 V3 V3 V6 V6 V5 V5 V8 V8 V7 V7"},
      {"V5", "V5 V6 V5 V6 V7 V8 V7 V8 V1 V2 V1 V2 V3 V4 V3 V4 V5 V5 V6 V6 V7 V7 V8 V8 V1 V1 V2 V2 V3 V3 V4 V4"},
      {"V6", "V6 V5 V6 V5 V8 V7 V8 V7 V2 V1 V2 V1 V4 V3 V4 V3 V6 V6 V5 V5 V8 V8 V7 V7 V2 V2 V1 V1 V4 V4 V3 V3"},
      {"V7", "V7 V8 V7 V8 V5 V6 V5 V6 V3 V4 V3 V4 V1 V2 V1 V2 V7 V7 V8 V8 V5 V5 V6 V6 V3 V3 V4 V4 V1 V1 V2 V2"},
      {"V8", "V8 V7 V8 V7 V6 V5 V6 V5 V4 V3 V4 V3 V2 V1 V2 V1 V8 V8 V7 V7 V6 V6 V5 V5 V4 V4 V3 V3 V2 V2 V1 V1"},
      {"M1",
       "M1:1:1 M1:1:1 M1:1:1 M1:1:1 M1~:1:1 M1~:1:1 M1~:1:1 M1~:1:1 M2:1:1 M2:1:1 M2:1:1 M2:1:1 M2~:1:1 M2~:1:1 "
       "M2~:1:1 M2~:1:1 M1:1:1 M1:1:1 M1:1:1 M1:1:1 M1~:1:1 M1~:1:1 M1~:1:1 M1~:1:1 M2:1:1 M2:1:1 M2:1:1 M2:1:1 "
       "M2~:1:1 M2~:1:1 M2~:1:1 M2~:1:1"},
      {"M2",
       "M2:1:1 M2:1:1 M2:1:1 M2:1:1 M2~:1:1 M2~:1:1 M2~:1:1 M2~:1:1 M1:1:1 M1:1:1 M1:1:1 M1:1:1 M1~:1:1 M1~:1:1 "
       "M1~:1:1 M1~:1:1 M2~:1:1 M2~:1:1 M2~:1:1 M2~:1:1 M2:1:1 M2:1:1 M2:1:1 M2:1:1 M1~:1:1 M1~:1:1 M1~:1:1 "
       "M1~:1:1 M1:1:1 M1:1:1 M1:1:1 M1:1:1"},
      {"M8",
       "M8:1:1 M8:1:-1 M8:1:1 M8:1:-1 M8:1:1 M8:1:-1 M8:1:1 M8:1:-1 M7:1:1 M7:1:-1 M7:1:1 M7:1:-1 M7:1:1 M7:1:-1 "
       "M7:1:1 M7:1:-1 M8~:1:-1 M8~:1:-1 M8~:1:1 M8~:1:1 M8~:1:-1 M8~:1:-1 M8~:1:1 M8~:1:1 M7~:1:-1 M7~:1:-1 "
       "M7~:1:1 M7~:1:1 M7~:1:-1 M7~:1:-1 M7~:1:1 M7~:1:1"},
      {"M13",
       "M13:1:1 M14:1:1 M13:1:-1 M14:1:-1 M13:1:-1 M14:1:-1 M13:1:1 M14:1:1 M14:1:1 M13:1:1 M14:1:-1 M13:1:-1 "
       "M14:1:-1 M13:1:-1 M14:1:1 M13:1:1 M13:1:x M13:1:-x M14:1:x M14:1:-x M13:1:-x M13:1:x M14:1:-x M14:1:x "
       "M14:1:x M14:1:-x M13:1:x M13:1:-x M14:1:-x M14:1:x M13:1:-x M13:1:x"},
      {"M14",
       "M14:1:1 M13:1:1 M14:1:-1 M13:1:-1 M14:1:-1 M13:1:-1 M14:1:1 M13:1:1 M13:1:1 M14:1:1 M13:1:-1 M14:1:-1 "
       "M13:1:-1 M14:1:-1 M13:1:1 M14:1:1 M14:1:-x M14:1:x M13:1:-x M13:1:x M14:1:x M14:1:-x M13:1:x M13:1:-x "
       "M13:1:-x M13:1:x M14:1:-x M14:1:x M13:1:x M13:1:-x M14:1:x M14:1:-x"},
      {"M15",
       "M15:1:1 M16:1:1 M15:1:-1 M16:1:-1 M15:1:1 M16:1:1 M15:1:-1 M16:1:-1 M15:1:1 M16:1:1 M15:1:-1 M16:1:-1 "
       "M15:1:1 M16:1:1 M15:1:-1 M16:1:-1 M15:1:x M15:1:-x M16:1:x M16:1:-x M15:1:x M15:1:-x M16:1:x M16:1:-x "
       "M15:1:x M15:1:-x M16:1:x M16:1:-x M15:1:x M15:1:-x M16:1:x M16:1:-x"},
      {"M16",
       "M16:1:1 M15:1:1 M16:1:-1 M15:1:-1 M16:1:1 M15:1:1 M16:1:-1 M15:1:-1 M16:1:1 M15:1:1 M16:1:-1 M15:1:-1 "
       "M16:1:1 M15:1:1 M16:1:-1 M15:1:-1 M16:1:-x M16:1:x M15:1:-x M15:1:x M16:1:-x M16:1:x M15:1:-x M15:1:x "
       "M16:1:-x M16:1:x M15:1:-x M15:1:x M16:1:-x M16:1:x M15:1:-x M15:1:x"},
      {"M17",
       "M17:1:1 M18:1:1 M17:1:-1 M18:1:-1 M18~:1:1 M17~:1:1 M18~:1:-1 M17~:1:-1 M17:1:1 M18:1:1 M17:1:-1 M18:1:-1 "
       "M18~:1:1 M17~:1:1 M18~:1:-1 M17~:1:-1 M19:1:x M19:1:-x M20~:1:x M20~:1:-x M20:1:x M20:1:-x M19~:1:x "
       "M19~:1:-x M20:1:x M20:1:-x M19~:1:x M19~:1:-x M19:1:x M19:1:-x M20~:1:x M20~:1:-x"},
      {"M18",
       "M18:1:1 M17:1:1 M18:1:-1 M17:1:-1 M17~:1:1 M18~:1:1 M17~:1:-1 M18~:1:-1 M18:1:1 M17:1:1 M18:1:-1 M17:1:-1 "
       "M17~:1:1 M18~:1:1 M17~:1:-1 M18~:1:-1 M20~:1:-x M20~:1:x M19:1:-x M19:1:x M19~:1:-x M19~:1:x M20:1:-x "
       "M20:1:x M19~:1:-x M19~:1:x M20:1:-x M20:1:x M20~:1:-x M20~:1:x M19:1:-x M19:1:x"},
  };
  return rows;
}

struct Twist {
  std::string target;
  bool swap = false;
  Scalar c1 = Scalar(1), c2 = Scalar(1);
};

Twist twist(const std::string& module, int tau) {
  if (tau < 1 || tau > 32) throw CatalogError("tau index out of range");
  auto it = twist_rows().find(module);
  if (it == twist_rows().end()) throw CatalogError("no twist data for " + module);
  std::istringstream in(it->second);
  std::string entry;
  for (int k = 0; k < tau; ++k) in >> entry;
  Twist t;
  const auto colon = entry.find(':');
  t.target = entry.substr(0, colon);
  if (!t.target.empty() && t.target.back() == '~') {
    t.swap = true;
    t.target.pop_back();
  }
  if (colon != std::string::npos) {
    const auto second = entry.find(':', colon + 1);
    t.c1 = Scalar::parse(entry.substr(colon + 1, second - colon - 1));
    t.c2 = Scalar::parse(entry.substr(second + 1));
  }
  return t;
}

// ------------------------------------------------------------------ family shapes

// One-dimensional classes A..H (V1..V8) present in the family, with their
// multiplicities, indexed by class.
std::vector<int> class_counts(const std::string& family, const std::vector<int>& n) {
  if (family == "U1") return n;
  if (family == "U2" || family == "U9") return {0, 0, 0, 0, n[0], n[1], n[2], n[3]};
  return std::vector<int>(8, 0);
}

struct PairSpec {
  std::string prefix;  // "p" or "q"
  std::string type;    // "M1", ...
};

std::vector<PairSpec> pair_specs(const std::string& family) {
  static const std::map<std::string, std::vector<PairSpec>> specs{
      {"U1", {}},
      {"U2", {{"p", "M1"}}},
      {"U9", {{"p", "M8"}}},
      {"U14", {{"p", "M1"}, {"q", "M1"}}},
      {"U15", {{"p", "M1"}, {"q", "M2"}}},
      {"U38", {{"p", "M13"}, {"q", "M13"}}},
      {"U39", {{"p", "M13"}, {"q", "M14"}}},
      {"U41", {{"p", "M15"}, {"q", "M15"}}},
      {"U42", {{"p", "M15"}, {"q", "M16"}}},
      {"U44", {{"p", "M17"}, {"q", "M17"}}},
      {"U45", {{"p", "M17"}, {"q", "M18"}}},
  };
  auto it = specs.find(family);
  if (it == specs.end()) throw CatalogError("no isomorphism conditions for " + family);
  return it->second;
}

bool same_type_pairs(const std::string& family) {
  auto s = pair_specs(family);
  return s.size() == 2 && s[0].type == s[1].type;
}

int class_of(const std::string& v) { return std::stoi(v.substr(1)) - 1; }
char class_letter(int cls) { return static_cast<char>('A' + cls); }
std::string matrix_name(int cls) { return std::string(1, static_cast<char>('a' + cls)); }

int class_image(int cls, int tau) { return class_of(twist("V" + std::to_string(cls + 1), tau).target); }

struct Link {
  int x, y;
  const char* param;
};
constexpr Link kLinks[4] = {{0, 3, "lambda"}, {1, 2, "mu"}, {4, 7, "nu"}, {5, 6, "gamma"}};

const Link* link_of(int x, int y) {
  for (const auto& l : kLinks)
    if ((l.x == x && l.y == y) || (l.x == y && l.y == x)) return &l;
  return nullptr;
}

// Coefficient name for the part of source pair `from` landing in target pair `to`.
std::string pair_coef(const std::string& family, const std::string& from, const std::string& to) {
  if (family == "U2") return "beta";
  if (family == "U9") return "z";
  if (same_type_pairs(family)) {
    if (from == "p") return to == "p" ? "z1" : "z2";
    return to == "p" ? "beta1" : "beta2";
  }
  return from == "p" ? "z" : "beta";
}

bool pair_branch_ok(const std::string& family, int tau) {
  const auto specs = pair_specs(family);
  for (const auto& s : specs) {
    const std::string t = twist(s.type, tau).target;
    bool found = false;
    for (const auto& u : specs) found = found || u.type == t;
    if (!found) return false;
  }
  return true;
}

Mat transpose(const Mat& m) { return m.transpose(); }

bool equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

Mat scalar_mat(const Scalar& s) {
  Mat m(1, 1);
  m(0, 0) = s;
  return m;
}

// The parameters I determined by I' and the witness through the family's
// conditions.
ParamSet conditions_image(const std::string& family, const std::vector<int>& n, const ParamSet& Ip,
                          const IsoWitness& w) {
  const int tau = w.tau;
  ParamSet I;
  const auto counts = class_counts(family, n);
  // linked classes: x^T P' y = P, with P' transposed when the images come in
  // the opposite order
  const bool has_classes = family == "U1" || family == "U2" || family == "U9";
  for (const auto& l : kLinks) {
    if (!has_classes || (family != "U1" && l.x < 4)) continue;
    const int cx = counts[static_cast<std::size_t>(l.x)], cy = counts[static_cast<std::size_t>(l.y)];
    if (cx == 0 || cy == 0) {
      I.set(l.param, Mat(Mat::Zero(cx, cy)));
      continue;
    }
    const int px = class_image(l.x, tau), py = class_image(l.y, tau);
    const Link* target = link_of(px, py);
    if (target == nullptr) throw CatalogError("tau does not preserve the linked classes");
    Mat pp = Ip.matrix(target->param);
    if (target->x != px) pp = transpose(pp);
    I.set(l.param, matmul(matmul(transpose(w.matrix(matrix_name(l.x))), pp), w.matrix(matrix_name(l.y))));
  }
  const Scalar xi = Scalar::xi();
  if (family == "U2") {
    const Scalar b = w.scalar("beta");
    I.set("lambda", b * b * Ip.scalar("lambda"));
  } else if (family == "U9") {
    const bool swapped = twist("M8", tau).swap;
    const char* vec[4] = {"lambda", "mu", "alpha", "beta"};
    for (int cls = 4; cls < 8; ++cls) {
      const int img = class_image(cls, tau);
      Scalar f = w.scalar("z");
      if (swapped) f = f * xi * Scalar(img == 4 || img == 6 ? 1 : -1);
      Mat m = matmul(transpose(w.matrix(matrix_name(cls))), Ip.matrix(vec[img - 4]));
      for (Index i = 0; i < m.rows(); ++i) m(i, 0) = f * m(i, 0);
      I.set(vec[cls - 4], m);
    }
  } else if (family == "U14" || family == "U38" || family == "U41" || family == "U44") {
    const Scalar z1 = w.scalar("z1"), z2 = w.scalar("z2"), b1 = w.scalar("beta1"), b2 = w.scalar("beta2");
    const Scalar l = Ip.scalar("lambda"), m = Ip.scalar("mu"), a = Ip.scalar("alpha");
    // the mixed terms carry a factor 2 in one family and the squares in the other
    const Scalar two(2);
    if (family == "U14") {
      I.set("lambda", z1 * z1 * l + two * z1 * z2 * a + z2 * z2 * m);
      I.set("mu", b1 * b1 * l + two * b1 * b2 * a + b2 * b2 * m);
      I.set("alpha", z1 * b1 * l + z2 * b2 * m + (z1 * b2 + z2 * b1) * a);
    } else {
      I.set("lambda", z1 * z1 * l + z1 * z2 * a + z2 * z2 * m);
      I.set("mu", b1 * b1 * l + b1 * b2 * a + b2 * b2 * m);
      I.set("alpha", two * z1 * b1 * l + two * z2 * b2 * m + (z1 * b2 + z2 * b1) * a);
    }
  } else if (family == "U15" || family == "U39" || family == "U42" || family == "U45") {
    const auto specs = pair_specs(family);
    const Twist tp = twist(specs[0].type, tau), tq = twist(specs[1].type, tau);
    const bool cross = tp.target != specs[0].type;
    const Scalar z = w.scalar("z"), b = w.scalar("beta");
    I.set("lambda", z * z * Ip.scalar(cross ? "mu" : "lambda"));
    I.set("mu", b * b * Ip.scalar(cross ? "lambda" : "mu"));
    if (family == "U15") {
      const bool mismatch = tp.swap != tq.swap;
      I.set("nu", z * b * Ip.scalar(mismatch ? "alpha" : "nu"));
      I.set("alpha", z * b * Ip.scalar(mismatch ? "nu" : "alpha"));
    } else if (family != "U45") {
      I.set("alpha", z * b * Ip.scalar("alpha"));
    }
  }
  return I;
}

}  // namespace

std::vector<int> iso_branches(const std::string& family, const std::vector<int>& n) {
  const auto counts = class_counts(family, n);
  std::vector<int> out;
  for (int tau = 1; tau <= 32; ++tau) {
    bool ok = pair_branch_ok(family, tau);
    for (int cls = 0; cls < 8 && ok; ++cls) {
      const int c = counts[static_cast<std::size_t>(cls)];
      const int img = class_image(cls, tau);
      if (family != "U1" && img < 4 && c > 0) ok = false;
      if (family != "U1" && cls >= 4 && img < 4) ok = false;
      if (ok && c != counts[static_cast<std::size_t>(img)]) ok = false;
    }
    if (ok) out.push_back(tau);
  }
  return out;
}

bool iso_condition(const std::string& family, const std::vector<int>& n, const ParamSet& I, const ParamSet& Iprime,
                   const IsoWitness& w) {
  const auto branches = iso_branches(family, n);
  if (std::find(branches.begin(), branches.end(), w.tau) == branches.end()) return false;
  // invertibility of the witness
  const bool mixed = same_type_pairs(family);
  for (const auto& [name, m] : w.values) {
    // the four pair scalars only need to form an invertible 2 x 2 matrix
    if (mixed && (name == "z1" || name == "z2" || name == "beta1" || name == "beta2")) continue;
    if (m.rows() != m.cols() || exact_rank(m) != m.rows()) return false;
  }
  if (mixed) {
    Mat mix(2, 2);
    mix << w.scalar("z1"), w.scalar("z2"), w.scalar("beta1"), w.scalar("beta2");
    if (exact_rank(mix) != 2) return false;
  }
  const ParamSet image = conditions_image(family, n, Iprime, w);
  for (const auto& [name, m] : image.values)
    if (!I.has(name) || !equal(I.matrix(name), m)) return false;
  return true;
}

std::map<std::string, Poly> induced_morphism(const std::string& family, const std::vector<int>& n,
                                             const Presentation& target, const IsoWitness& w) {
  const TauImages t = tau_images(w.tau);
  std::map<std::string, Poly> out{{"a", parse_poly(target, t.a)},
                                  {"b", parse_poly(target, t.b)},
                                  {"c", parse_poly(target, t.c)},
                                  {"d", parse_poly(target, t.d)}};
  const auto counts = class_counts(family, n);
  for (int cls = 0; cls < 8; ++cls) {
    const int c = counts[static_cast<std::size_t>(cls)];
    if (c == 0) continue;
    const int img = class_image(cls, w.tau);
    const Mat& m = w.matrix(matrix_name(cls));
    for (int j = 0; j < c; ++j) {
      Poly p;
      for (int i = 0; i < counts[static_cast<std::size_t>(img)]; ++i)
        p.add(target.gen(std::string(1, class_letter(img)) + std::to_string(i + 1)), m(i, j));
      out[std::string(1, class_letter(cls)) + std::to_string(j + 1)] = p;
    }
  }
  const auto specs = pair_specs(family);
  for (const auto& s : specs) {
    const Twist tw = twist(s.type, w.tau);
    Poly img1, img2;
    for (const auto& u : specs) {
      if (u.type != tw.target) continue;
      const Scalar k = w.scalar(pair_coef(family, s.prefix, u.prefix));
      const std::string first = u.prefix + (tw.swap ? "2" : "1");
      const std::string second = u.prefix + (tw.swap ? "1" : "2");
      img1.add(target.gen(first), k * tw.c1);
      img2.add(target.gen(second), k * tw.c2);
    }
    out[s.prefix + "1"] = img1;
    out[s.prefix + "2"] = img2;
  }
  return out;
}

std::pair<IsoWitness, ParamSet> random_iso_instance(const std::string& family, const std::vector<int>& n, int tau,
                                                    const ParamSet& Iprime, unsigned seed) {
  std::mt19937 rng(seed);
  static const char* pool[] = {"1", "-1", "2", "-2", "1/2", "x", "-x", "1+x", "3", "-1/3", "2-x"};
  auto pick = [&] {
    std::uniform_int_distribution<int> d(0, 10);
    return Scalar::parse(pool[d(rng)]);
  };
  auto entry = [&] {
    std::uniform_int_distribution<int> d(0, 5);
    static const char* small[] = {"0", "1", "-1", "2", "x", "0"};
    return Scalar::parse(small[d(rng)]);
  };
  IsoWitness w;
  w.tau = tau;
  const auto counts = class_counts(family, n);
  for (int cls = 0; cls < 8; ++cls) {
    const int c = counts[static_cast<std::size_t>(cls)];
    if (c == 0) continue;
    Mat m(c, c);
    do {
      for (Index i = 0; i < c; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = entry();
    } while (exact_rank(m) != c);
    w.values[matrix_name(cls)] = m;
  }
  if (family == "U2") w.values["beta"] = scalar_mat(pick());
  if (family == "U9") w.values["z"] = scalar_mat(pick());
  if (same_type_pairs(family)) {
    Mat mix(2, 2);
    do {
      mix << pick(), pick(), pick(), pick();
    } while (exact_rank(mix) != 2);
    w.values["z1"] = scalar_mat(mix(0, 0));
    w.values["z2"] = scalar_mat(mix(0, 1));
    w.values["beta1"] = scalar_mat(mix(1, 0));
    w.values["beta2"] = scalar_mat(mix(1, 1));
  } else if (pair_specs(family).size() == 2) {
    w.values["z"] = scalar_mat(pick());
    w.values["beta"] = scalar_mat(pick());
  }
  return {w, conditions_image(family, n, Iprime, w)};
}

}  // namespace hopflift::catalog
