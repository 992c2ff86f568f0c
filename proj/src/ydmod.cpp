#include "hopflift/ydmod.hpp"

#include <sstream>

namespace hopflift {

YDModule::YDModule(std::shared_ptr<const HopfData> parent, std::vector<Mat> action, Mat coaction,
                   std::string name)
    : parent_(std::move(parent)),
      action_(std::move(action)),
      coaction_(std::move(coaction)),
      name_(std::move(name)) {
  const auto n = static_cast<Index>(parent_->dim());
  const Index d = coaction_.cols();
  if (action_.size() != parent_->dim() || coaction_.rows() != n * d) {
    throw YDError("YDModule: action/coaction shapes do not match the parent");
  }
  for (const Mat& a : action_)
    if (a.rows() != d || a.cols() != d) throw YDError("YDModule: action matrix has wrong size");
  blocks_ = {static_cast<std::size_t>(d)};
}

Mat YDModule::action_of(const Element& h) const {
  Mat out = Mat::Zero(coaction_.cols(), coaction_.cols());
  for (Index i = 0; i < h.size(); ++i)
    if (!h(i).is_zero()) out += h(i) * action_[static_cast<std::size_t>(i)];
  return out;
}

bool YDReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string YDReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.identity + " fails at " + c.witness;
  return {};
}

namespace {

// delta(v_j) as a list of (g, i, coefficient).
struct CoTerm {
  std::size_t g;
  std::size_t i;
  Scalar c;
};

std::vector<CoTerm> coaction_terms(const YDModule& m, std::size_t j) {
  std::vector<CoTerm> out;
  const std::size_t d = m.dim();
  const Mat& co = m.coaction();
  for (Index r = 0; r < co.rows(); ++r) {
    const Scalar& s = co(r, static_cast<Index>(j));
    if (!s.is_zero()) out.push_back({static_cast<std::size_t>(r) / d, static_cast<std::size_t>(r) % d, s});
  }
  return out;
}

std::string witness(const HopfData& h, std::size_t b, std::size_t v) {
  std::ostringstream os;
  os << "h=" << h.basis_names()[b] << ", v=v" << (v + 1);
  return os.str();
}

}  // namespace

YDReport validate_yd(const YDModule& m) {
  const HopfData& h = m.parent();
  const std::size_t n = h.dim();
  const std::size_t d = m.dim();
  const auto sd = static_cast<Index>(d);
  YDReport rep;

  YDCheck unital{"unit acts as identity", true, {}};
  if (m.action_of(h.unit()) != Mat::Identity(sd, sd)) {
    unital.passed = false;
    unital.witness = "h=1";
  }
  rep.checks.push_back(unital);

  YDCheck module{"(gh).v = g.(h.v)", true, {}};
  for (std::size_t i = 0; i < n && module.passed; ++i)
    for (std::size_t j = 0; j < n && module.passed; ++j) {
      Mat lhs = Mat::Zero(sd, sd);
      for (const auto& [k, c] : h.product_terms(i, j)) lhs += c * m.action(k);
      if (lhs != matmul(m.action(i), m.action(j))) {
        module.passed = false;
        module.witness = "g=" + h.basis_names()[i] + ", h=" + h.basis_names()[j];
      }
    }
  rep.checks.push_back(module);

  YDCheck coassoc{"(Delta (x) id) delta = (id (x) delta) delta", true, {}};
  YDCheck counit{"(eps (x) id) delta = id", true, {}};
  for (std::size_t j = 0; j < d; ++j) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> lhs;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> rhs;
    Vec eps = Vec::Zero(sd);
    for (const auto& t : coaction_terms(m, j)) {
      for (const auto& [pq, c] : h.coproduct_terms(t.g)) lhs[{pq / n, pq % n, t.i}] += t.c * c;
      for (const auto& t2 : coaction_terms(m, t.i)) rhs[{t.g, t2.g, t2.i}] += t.c * t2.c;
      eps(static_cast<Index>(t.i)) += t.c * h.counit()(static_cast<Index>(t.g));
    }
    auto clean = [](auto& mp) {
      for (auto it = mp.begin(); it != mp.end();) it = it->second.is_zero() ? mp.erase(it) : ++it;
    };
    clean(lhs);
    clean(rhs);
    if (coassoc.passed && lhs != rhs) {
      coassoc.passed = false;
      coassoc.witness = "v=v" + std::to_string(j + 1);
    }
    Vec e = Vec::Zero(sd);
    e(static_cast<Index>(j)) = 1;
    if (counit.passed && eps != e) {
      counit.passed = false;
      counit.witness = "v=v" + std::to_string(j + 1);
    }
  }
  rep.checks.push_back(coassoc);
  rep.checks.push_back(counit);

  YDCheck compat{"delta(h.v) = h1 v(-1) S(h3) (x) h2.v(0)", true, {}};
  for (std::size_t b = 0; b < n && compat.passed; ++b) {
    // Delta^2(e_b) as (p, q, k) triples.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> d2;
    for (const auto& [jk, c] : h.coproduct_terms(b))
      for (const auto& [pq, c2] : h.coproduct_terms(jk / n)) d2[{pq / n, pq % n, jk % n}] += c * c2;
    for (std::size_t j = 0; j < d && compat.passed; ++j) {
      Mat lhs = Mat::Zero(static_cast<Index>(n), sd);  // coefficient of e_g (x) v_i at (g, i)
      for (std::size_t i = 0; i < d; ++i) {
        const Scalar& a = m.action(b)(static_cast<Index>(i), static_cast<Index>(j));
        if (a.is_zero()) continue;
        for (const auto& t : coaction_terms(m, i)) lhs(static_cast<Index>(t.g), static_cast<Index>(t.i)) += a * t.c;
      }
      Mat rhs = Mat::Zero(static_cast<Index>(n), sd);
      auto terms = coaction_terms(m, j);
      for (const auto& [pqk, c] : d2) {
        if (c.is_zero()) continue;
        auto [p, q, k] = pqk;
        for (const auto& t : terms) {
          // h1 v(-1) S(h3), accumulated sparsely
          std::map<std::size_t, Scalar> left;
          for (const auto& [k1, c1] : h.product_terms(p, t.g))
            for (std::size_t sidx = 0; sidx < n; ++sidx) {
              const Scalar& sv = h.antipode()(static_cast<Index>(sidx), static_cast<Index>(k));
              if (sv.is_zero()) continue;
              for (const auto& [k2, c2] : h.product_terms(k1, sidx)) left[k2] += c1 * sv * c2;
            }
          const Mat& act = m.action(q);
          Scalar f = c * t.c;
          for (const auto& [g, lv] : left) {
            if (lv.is_zero()) continue;
            for (std::size_t l = 0; l < d; ++l) {
              const Scalar& mv = act(static_cast<Index>(l), static_cast<Index>(t.i));
              if (!mv.is_zero()) rhs(static_cast<Index>(g), static_cast<Index>(l)) += f * lv * mv;
            }
          }
        }
      }
      if (lhs != rhs) {
        compat.passed = false;
        compat.witness = witness(h, b, j);
      }
    }
  }
  rep.checks.push_back(compat);
  return rep;
}

YDModule build_yd(std::shared_ptr<const HopfData> parent,
                  const std::map<std::string, Mat>& generator_actions, const Mat& coaction,
                  std::string name) {
  const HopfData& h = *parent;
  if (h.spelling().empty()) throw YDError("build_yd: parent has no generator spelling");
  const Index d = coaction.cols();
  std::vector<Mat> gens;
  for (const auto& g : h.generators()) {
    auto it = generator_actions.find(g);
    if (it == generator_actions.end()) throw YDError("build_yd: missing action of generator " + g);
    if (it->second.rows() != d || it->second.cols() != d)
      throw YDError("build_yd: action of " + g + " has wrong size");
    gens.push_back(it->second);
  }
  std::vector<Mat> action;
  for (const auto& word : h.spelling()) {
    Mat a = Mat::Identity(d, d);
    for (std::size_t letter : word) a = matmul(a, gens[letter]);
    action.push_back(std::move(a));
  }
  YDModule m(std::move(parent), std::move(action), coaction, std::move(name));
  YDReport rep = validate_yd(m);
  if (!rep.ok()) throw YDError("invalid Yetter-Drinfeld module " + m.name() + ": " + rep.first_failure());
  return m;
}

Mat braiding(const YDModule& m, const YDModule& n) {
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  Mat c = Mat::Zero(static_cast<Index>(dn * dm), static_cast<Index>(dm * dn));
  for (std::size_t j = 0; j < dm; ++j)
    for (const auto& t : coaction_terms(m, j)) {
      const Mat& act = n.action(t.g);
      for (std::size_t k = 0; k < dn; ++k)
        for (std::size_t l = 0; l < dn; ++l) {
          const Scalar& a = act(static_cast<Index>(l), static_cast<Index>(k));
          if (a.is_zero()) continue;
          c(static_cast<Index>(l * dm + t.i), static_cast<Index>(j * dn + k)) += t.c * a;
        }
    }
  return c;
}

bool satisfies_braid_equation(const Mat& c, std::size_t dim) {
  const auto d = static_cast<Index>(dim);
  Mat id = Mat::Identity(d, d);
  Mat c1 = kron(c, id);
  Mat c2 = kron(id, c);
  return matmul(matmul(c1, c2), c1) == matmul(matmul(c2, c1), c2);
}

YDModule direct_sum(const std::vector<YDModule>& parts) {
  if (parts.empty()) throw YDError("direct_sum: no summands");
  auto parent = parts.front().parent_ptr();
  const std::size_t n = parent->dim();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.parent_ptr() != parent && !(p.parent() == *parent))
      throw YDError("direct_sum: summands live over different Hopf algebras");
    total += p.dim();
  }
  const auto st = static_cast<Index>(total);
  std::vector<Mat> action(n, Mat::Zero(st, st));
  Mat co = Mat::Zero(static_cast<Index>(n) * st, st);
  std::vector<std::size_t> blocks;
  std::string name;
  std::size_t off = 0;
  for (const auto& p : parts) {
    const auto pd = static_cast<Index>(p.dim());
    const auto so = static_cast<Index>(off);
    for (std::size_t h = 0; h < n; ++h) action[h].block(so, so, pd, pd) = p.action(h);
    for (std::size_t g = 0; g < n; ++g)
      co.block(static_cast<Index>(g) * st + so, so, pd, pd) =
          p.coaction().block(static_cast<Index>(g) * pd, 0, pd, pd);
    blocks.insert(blocks.end(), p.blocks().begin(), p.blocks().end());
    name += (name.empty() ? "" : "+") + p.name();
    off += p.dim();
  }
  YDModule out(parent, std::move(action), std::move(co), name);
  out.set_blocks(std::move(blocks));
  return out;
}

YDModule transfer_to_dual(const YDModule& m, std::shared_ptr<const HopfData> dual) {
  const HopfData& h = m.parent();
  if (!dual) dual = std::make_shared<HopfData>(dualize(h));
  const std::size_t n = h.dim();
  const std::size_t d = m.dim();
  const auto sd = static_cast<Index>(d);
  const Mat& s = h.antipode();
  auto sinv = inverse(s);
  if (!sinv) throw YDError("transfer_to_dual: antipode is not invertible");

  std::vector<Mat> action(n, Mat::Zero(sd, sd));
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& t : coaction_terms(m, j))
      for (std::size_t i = 0; i < n; ++i) {
        const Scalar& sig = s(static_cast<Index>(i), static_cast<Index>(t.g));
        if (!sig.is_zero()) action[i](static_cast<Index>(t.i), static_cast<Index>(j)) += sig * t.c;
      }
  Mat co = Mat::Zero(static_cast<Index>(n) * sd, sd);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t mm = 0; mm < n; ++mm) {
      const Scalar& f = (*sinv)(static_cast<Index>(i), static_cast<Index>(mm));
      if (f.is_zero()) continue;
      co.block(static_cast<Index>(mm) * sd, 0, sd, sd) += f * m.action(i);
    }
  YDModule out(std::move(dual), std::move(action), std::move(co), m.name() + "*");
  out.set_blocks(m.blocks());
  return out;
}

bool is_involutive_pair(const YDModule& m, const YDModule& n) {
  Mat comp = matmul(braiding(n, m), braiding(m, n));
  const Index sz = comp.rows();
  return comp == Mat::Identity(sz, sz);
}

namespace {

bool symmetric_at(const Mat& c, const Vec& v) {
  Vec vv = kron(v, v);
  return matmul(c, vv) == vv;
}

}  // namespace

std::optional<Vec> find_symmetric_vector(const YDModule& m) {
  const Mat c = braiding(m, m);
  const auto d = static_cast<Index>(m.dim());
  Mat shift = c - Mat::Identity(d * d, d * d);

  Index off = 0;
  for (std::size_t b : m.blocks()) {
    if (b == 1) {
      Vec v = Vec::Zero(d);
      v(off) = 1;
      if (symmetric_at(c, v)) return v;
    } else if (b == 2) {
      Vec e0 = Vec::Zero(d);
      Vec e1 = Vec::Zero(d);
      e0(off) = 1;
      e1(off + 1) = 1;
      if (symmetric_at(c, e1)) return e1;
      // (c - id)((e0 + t e1)^{(x)2}) = F0 + t F1 + t^2 F2.
      Vec f0 = matmul(shift, kron(e0, e0));
      Vec f1 = matmul(shift, Vec(kron(e0, e1) + kron(e1, e0)));
      Vec f2 = matmul(shift, kron(e1, e1));
      std::vector<Scalar> candidates;
      bool all_zero = true;
      for (Index r = 0; r < f0.size() && all_zero; ++r) {
        if (f0(r).is_zero() && f1(r).is_zero() && f2(r).is_zero()) continue;
        all_zero = false;
        bool complete = true;
        candidates = roots_in_field({f0(r), f1(r), f2(r)}, complete);
      }
      if (all_zero) candidates = {Scalar(0)};
      for (const Scalar& t : candidates) {
        Vec v = e0 + t * e1;
        if (symmetric_at(c, v)) return v;
      }
    }
    off += static_cast<Index>(b);
  }

  if (d > 6) return std::nullopt;
  const std::vector<Scalar> grid{Scalar(0), Scalar(1), Scalar(-1), Scalar::xi(), -Scalar::xi()};
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    // Projective normalisation: first nonzero entry equal to 1.
    Index first = 0;
    while (first < d && idx[static_cast<std::size_t>(first)] == 0) ++first;
    if (first < d && idx[static_cast<std::size_t>(first)] == 1) {
      Vec v(d);
      for (Index k = 0; k < d; ++k) v(k) = grid[idx[static_cast<std::size_t>(k)]];
      if (symmetric_at(c, v)) return v;
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return std::nullopt;
}

}  // namespace hopflift
