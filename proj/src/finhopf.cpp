#include "hopflift/finhopf.hpp"

#include <stdexcept>

namespace hopflift {

HopfData::HopfData(std::vector<std::string> basis_names, std::vector<Scalar> mul, Vec unit,
                   std::vector<Scalar> comul, Vec counit, Mat antipode)
    : names_(std::move(basis_names)),
      mul_(std::move(mul)),
      unit_(std::move(unit)),
      comul_(std::move(comul)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t n = names_.size();
  const auto sn = static_cast<Index>(n);
  if (n == 0 || mul_.size() != n * n * n || comul_.size() != n * n * n || unit_.size() != sn ||
      counit_.size() != sn || antipode_.rows() != sn || antipode_.cols() != sn) {
    throw std::invalid_argument("HopfData: structure tensors do not match the basis size");
  }
  build_caches();
}

void HopfData::build_caches() {
  const std::size_t n = dim();
  prod_.assign(n * n, {});
  cop_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!mul(i, j, k).is_zero()) prod_[i * n + j].emplace_back(k, mul(i, j, k));
        if (!comul(i, j, k).is_zero()) cop_[i].emplace_back(j * n + k, comul(i, j, k));
      }
}

void HopfData::set_spelling(std::vector<std::string> gens,
                            std::vector<std::vector<std::size_t>> spelling) {
  if (spelling.size() != dim()) throw std::invalid_argument("spelling size mismatch");
  gens_ = std::move(gens);
  spelling_ = std::move(spelling);
}

Element HopfData::basis(std::size_t i) const {
  Element e = Vec::Zero(static_cast<Index>(dim()));
  e(static_cast<Index>(i)) = 1;
  return e;
}

Element HopfData::multiply(const Element& x, const Element& y) const {
  const std::size_t n = dim();
  Element out = Vec::Zero(static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& xi = x(static_cast<Index>(i));
    if (xi.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& yj = y(static_cast<Index>(j));
      if (yj.is_zero()) continue;
      Scalar f = xi * yj;
      for (const auto& [k, c] : product_terms(i, j)) out(static_cast<Index>(k)) += f * c;
    }
  }
  return out;
}

Vec HopfData::coproduct(const Element& x) const {
  const std::size_t n = dim();
  Vec out = Vec::Zero(static_cast<Index>(n * n));
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& xi = x(static_cast<Index>(i));
    if (xi.is_zero()) continue;
    for (const auto& [jk, c] : cop_[i]) out(static_cast<Index>(jk)) += xi * c;
  }
  return out;
}

Scalar HopfData::epsilon(const Element& x) const {
  Scalar s = 0;
  for (Index i = 0; i < x.size(); ++i)
    if (!x(i).is_zero()) s += x(i) * counit_(i);
  return s;
}

Mat HopfData::left_mult(const Element& x) const {
  const std::size_t n = dim();
  Mat m = Mat::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t j = 0; j < n; ++j) m.col(static_cast<Index>(j)) = multiply(x, basis(j));
  return m;
}

bool operator==(const HopfData& a, const HopfData& b) {
  return a.names_.size() == b.names_.size() && a.mul_ == b.mul_ && a.unit_ == b.unit_ &&
         a.comul_ == b.comul_ && a.counit_ == b.counit_ && a.antipode_ == b.antipode_;
}

bool AxiomReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

using TensorMap = std::vector<Scalar>;  // dense n^k tensor

// (x (x) y) -> product in H (x) H, both given as dense n^2 vectors.
Vec tensor_mult(const HopfData& h, const Vec& x, const Vec& y) {
  const std::size_t n = h.dim();
  Vec out = Vec::Zero(static_cast<Index>(n * n));
  for (std::size_t p = 0; p < n * n; ++p) {
    const Scalar& xp = x(static_cast<Index>(p));
    if (xp.is_zero()) continue;
    for (std::size_t q = 0; q < n * n; ++q) {
      const Scalar& yq = y(static_cast<Index>(q));
      if (yq.is_zero()) continue;
      Scalar f = xp * yq;
      const Terms& left = h.product_terms(p / n, q / n);
      const Terms& right = h.product_terms(p % n, q % n);
      for (const auto& [k1, c1] : left)
        for (const auto& [k2, c2] : right) out(static_cast<Index>(k1 * n + k2)) += f * c1 * c2;
    }
  }
  return out;
}

}  // namespace

AxiomReport verify_axioms(const HopfData& h) {
  const std::size_t n = h.dim();
  AxiomReport rep;

  AxiomCheck assoc{"associativity", true, {}, {}};
  for (std::size_t i = 0; i < n && assoc.passed; ++i)
    for (std::size_t j = 0; j < n && assoc.passed; ++j)
      for (std::size_t k = 0; k < n && assoc.passed; ++k) {
        Vec lhs = Vec::Zero(static_cast<Index>(n));
        Vec rhs = Vec::Zero(static_cast<Index>(n));
        for (const auto& [m, c] : h.product_terms(i, j))
          for (const auto& [l, c2] : h.product_terms(m, k)) lhs(static_cast<Index>(l)) += c * c2;
        for (const auto& [m, c] : h.product_terms(j, k))
          for (const auto& [l, c2] : h.product_terms(i, m)) rhs(static_cast<Index>(l)) += c * c2;
        if (lhs != rhs) {
          assoc.passed = false;
          assoc.witness = {i, j, k};
          assoc.detail = "(e_i e_j) e_k != e_i (e_j e_k)";
        }
      }
  rep.checks.push_back(assoc);

  AxiomCheck unit{"unit", true, {}, {}};
  for (std::size_t i = 0; i < n && unit.passed; ++i) {
    Element e = h.basis(i);
    if (h.multiply(h.unit(), e) != e || h.multiply(e, h.unit()) != e) {
      unit.passed = false;
      unit.witness = {i};
      unit.detail = "1 e_i != e_i or e_i 1 != e_i";
    }
  }
  rep.checks.push_back(unit);

  AxiomCheck coassoc{"coassociativity", true, {}, {}};
  for (std::size_t i = 0; i < n && coassoc.passed; ++i) {
    TensorMap lhs(n * n * n, Scalar(0));
    TensorMap rhs(n * n * n, Scalar(0));
    for (const auto& [jk, c] : h.coproduct_terms(i)) {
      std::size_t j = jk / n;
      std::size_t k = jk % n;
      for (const auto& [pq, c2] : h.coproduct_terms(j)) lhs[pq * n + k] += c * c2;
      for (const auto& [pq, c2] : h.coproduct_terms(k)) rhs[j * n * n + pq] += c * c2;
    }
    if (lhs != rhs) {
      coassoc.passed = false;
      coassoc.witness = {i};
      coassoc.detail = "(Delta (x) id) Delta(e_i) != (id (x) Delta) Delta(e_i)";
    }
  }
  rep.checks.push_back(coassoc);

  AxiomCheck counit{"counit", true, {}, {}};
  for (std::size_t i = 0; i < n && counit.passed; ++i) {
    Vec left = Vec::Zero(static_cast<Index>(n));
    Vec right = Vec::Zero(static_cast<Index>(n));
    for (const auto& [jk, c] : h.coproduct_terms(i)) {
      std::size_t j = jk / n;
      std::size_t k = jk % n;
      left(static_cast<Index>(k)) += c * h.counit()(static_cast<Index>(j));
      right(static_cast<Index>(j)) += c * h.counit()(static_cast<Index>(k));
    }
    Element e = h.basis(i);
    if (left != e || right != e) {
      counit.passed = false;
      counit.witness = {i};
      counit.detail = "(eps (x) id) Delta(e_i) != e_i";
    }
  }
  rep.checks.push_back(counit);

  AxiomCheck bialg{"bialgebra", true, {}, {}};
  {
    Vec one2 = kron(h.unit(), h.unit());
    if (h.coproduct(h.unit()) != one2 || h.epsilon(h.unit()) != Scalar(1)) {
      bialg.passed = false;
      bialg.detail = "Delta(1) != 1 (x) 1 or eps(1) != 1";
    }
  }
  for (std::size_t i = 0; i < n && bialg.passed; ++i)
    for (std::size_t j = 0; j < n && bialg.passed; ++j) {
      Element eij = h.multiply(h.basis(i), h.basis(j));
      Vec lhs = h.coproduct(eij);
      Vec rhs = tensor_mult(h, h.coproduct(h.basis(i)), h.coproduct(h.basis(j)));
      if (lhs != rhs) {
        bialg.passed = false;
        bialg.witness = {i, j};
        bialg.detail = "Delta(e_i e_j) != Delta(e_i) Delta(e_j)";
      } else if (h.epsilon(eij) != h.counit()(static_cast<Index>(i)) *
                                        h.counit()(static_cast<Index>(j))) {
        bialg.passed = false;
        bialg.witness = {i, j};
        bialg.detail = "eps(e_i e_j) != eps(e_i) eps(e_j)";
      }
    }
  rep.checks.push_back(bialg);

  AxiomCheck anti{"antipode", true, {}, {}};
  for (std::size_t i = 0; i < n && anti.passed; ++i) {
    Vec left = Vec::Zero(static_cast<Index>(n));
    Vec right = Vec::Zero(static_cast<Index>(n));
    for (const auto& [jk, c] : h.coproduct_terms(i)) {
      std::size_t j = jk / n;
      std::size_t k = jk % n;
      left += c * h.multiply(h.apply_antipode(h.basis(j)), h.basis(k));
      right += c * h.multiply(h.basis(j), h.apply_antipode(h.basis(k)));
    }
    Vec expect = h.counit()(static_cast<Index>(i)) * h.unit();
    if (left != expect || right != expect) {
      anti.passed = false;
      anti.witness = {i};
      anti.detail = "m(S (x) id) Delta(e_i) != eps(e_i) 1";
    }
  }
  rep.checks.push_back(anti);
  return rep;
}

namespace {

// Span of the two-sided ideal of the dual algebra generated by commutators,
// returned as an rref basis (rows).
Mat commutator_ideal(const HopfData& dual) {
  const std::size_t n = dual.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec c = dual.multiply(dual.basis(i), dual.basis(j)) -
              dual.multiply(dual.basis(j), dual.basis(i));
      if (!is_zero_matrix(c)) gens.push_back(c);
    }
  Mat span(0, static_cast<Index>(n));
  auto rank_of = [](const Mat& m) { return exact_rank(m); };
  std::vector<Vec> frontier = gens;
  std::vector<Vec> all;
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier) {
      Mat trial(span.rows() + 1, span.cols());
      trial.topRows(span.rows()) = span;
      trial.row(span.rows()) = v.transpose();
      if (rank_of(trial) == trial.rows()) {
        span = trial;
        for (std::size_t k = 0; k < n; ++k) {
          next.push_back(dual.multiply(dual.basis(k), v));
          next.push_back(dual.multiply(v, dual.basis(k)));
        }
      }
    }
    frontier = std::move(next);
  }
  return span;
}

}  // namespace

GroupLikes group_likes(const HopfData& h) {
  // Group-likes of H are the characters of H*. They vanish on the commutator
  // ideal I, and a functional chi in I^perp is a character iff it is a common
  // eigenvector of the transposed multiplication operators with eigenvalue
  // chi(x) and chi(1) = 1.
  GroupLikes out;
  HopfData dual = dualize(h);
  const std::size_t n = h.dim();
  const auto sn = static_cast<Index>(n);
  Mat ideal = commutator_ideal(dual);
  Mat w = ideal.rows() == 0 ? Mat(Mat::Identity(sn, sn)) : nullspace(ideal);  // columns: I^perp
  const Index r = w.cols();
  if (r == 0) return out;

  // Restrictions R_x with L_x^T W = W R_x.
  std::vector<Mat> restricted;
  for (std::size_t x = 0; x < n; ++x) {
    Mat lt = dual.left_mult(dual.basis(x)).transpose();
    Mat image = matmul(lt, w);
    Mat rx(r, r);
    for (Index c = 0; c < r; ++c) {
      auto sol = solve(w, image.col(c));
      if (!sol) throw std::logic_error("group_likes: annihilator of an ideal is not invariant");
      rx.col(c) = *sol;
    }
    restricted.push_back(std::move(rx));
  }

  // Split coordinate space into common eigenspaces.
  std::vector<Mat> spaces{Mat(Mat::Identity(r, r))};
  for (const Mat& rx : restricted) {
    std::vector<Mat> next;
    for (const Mat& u : spaces) {
      // Restrict rx to u: rx u = u t.
      Mat image = matmul(rx, u);
      Mat t(u.cols(), u.cols());
      for (Index c = 0; c < u.cols(); ++c) t.col(c) = *solve(u, image.col(c));
      bool complete = true;
      auto roots = roots_in_field(charpoly(t), complete);
      Index covered = 0;
      for (const Scalar& lam : roots) {
        Mat shifted = t;
        for (Index i = 0; i < t.rows(); ++i) shifted(i, i) -= lam;
        Mat ker = nullspace(shifted);
        if (ker.cols() == 0) continue;
        covered += ker.cols();
        next.push_back(matmul(u, ker));
      }
      if (!complete || covered < u.cols()) out.conclusive = false;
    }
    spaces = std::move(next);
  }

  for (const Mat& u : spaces) {
    if (u.cols() != 1) {
      out.conclusive = false;
      continue;
    }
    Vec g = matmul(w, u).col(0);
    Scalar eps = h.epsilon(g);
    if (eps.is_zero()) continue;
    g /= eps;
    if (h.coproduct(g) == kron(g, g)) out.elements.push_back(g);
  }
  return out;
}

std::vector<Element> skew_primitives(const HopfData& hd, const Element& g, const Element& h) {
  const std::size_t n = hd.dim();
  Mat sys(static_cast<Index>(n * n), static_cast<Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    Element e = hd.basis(j);
    sys.col(static_cast<Index>(j)) = hd.coproduct(e) - kron(e, g) - kron(h, e);
  }
  Mat ns = nullspace(sys);
  std::vector<Element> out;
  for (Index c = 0; c < ns.cols(); ++c) out.emplace_back(ns.col(c));
  return out;
}

bool check_hopf_morphism(const HopfData& from, const HopfData& to, const Mat& f) {
  const auto n1 = static_cast<Index>(from.dim());
  const auto n2 = static_cast<Index>(to.dim());
  if (f.rows() != n2 || f.cols() != n1) return false;
  if (f * from.unit() != to.unit()) return false;
  for (Index i = 0; i < n1; ++i) {
    Vec fi = f.col(i);
    if (to.epsilon(fi) != from.counit()(i)) return false;
    for (Index j = 0; j < n1; ++j) {
      Vec lhs = f * from.multiply(from.basis(static_cast<std::size_t>(i)),
                                  from.basis(static_cast<std::size_t>(j)));
      if (lhs != to.multiply(fi, f.col(j))) return false;
    }
    Vec delta = from.coproduct(from.basis(static_cast<std::size_t>(i)));
    Vec pushed = Vec::Zero(n2 * n2);
    for (Index p = 0; p < delta.size(); ++p) {
      if (delta(p).is_zero()) continue;
      pushed += delta(p) * kron(Vec(f.col(p / n1)), Vec(f.col(p % n1)));
    }
    if (pushed != to.coproduct(fi)) return false;
  }
  return true;
}

HopfData dualize(const HopfData& h) {
  const std::size_t n = h.dim();
  std::vector<Scalar> mul(n * n * n);
  std::vector<Scalar> comul(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        mul[(i * n + j) * n + k] = h.comul(k, i, j);
        comul[(i * n + j) * n + k] = h.mul(j, k, i);
      }
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& s : h.basis_names()) names.push_back(s + "*");
  return HopfData(std::move(names), std::move(mul), h.counit(), std::move(comul), h.unit(),
                  h.antipode().transpose());
}

HopfData cyclic_group_algebra(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g^" + std::to_string(i));
  std::vector<Scalar> mul(n * n * n, Scalar(0));
  std::vector<Scalar> comul(n * n * n, Scalar(0));
  Mat s = Mat::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mul[(i * n + j) * n + (i + j) % n] = 1;
    comul[(i * n + i) * n + i] = 1;
    s(static_cast<Index>((n - i) % n), static_cast<Index>(i)) = 1;
  }
  Vec unit = Vec::Zero(static_cast<Index>(n));
  unit(0) = 1;
  Vec counit = Vec::Constant(static_cast<Index>(n), Scalar(1));
  return HopfData(std::move(names), std::move(mul), unit, std::move(comul), counit, s);
}

}  // namespace hopflift
