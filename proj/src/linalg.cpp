#include "hopflift/linalg.hpp"

#include <algorithm>

namespace hopflift {

Mat matmul(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k)
    for (Index j = 0; j < b.cols(); ++j) {
      const Scalar& bkj = b(k, j);
      if (bkj.is_zero()) continue;
      for (Index i = 0; i < a.rows(); ++i) {
        const Scalar& aik = a(i, k);
        if (!aik.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

std::vector<Scalar> charpoly(const Mat& a) {
  // Faddeev-LeVerrier; exact division by k is fine in characteristic zero.
  const Index n = a.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1), Scalar(0));
  c[static_cast<std::size_t>(n)] = 1;
  Mat m = Mat::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    Mat next = matmul(a, m);
    for (Index i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    m = std::move(next);
    Mat am = matmul(a, m);
    Scalar tr = 0;
    for (Index i = 0; i < n; ++i) tr += am(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

namespace {

void trim(std::vector<Scalar>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Scalar eval(const std::vector<Scalar>& p, const Scalar& t) {
  Scalar acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Divides p by (t - r), assuming r is a root.
std::vector<Scalar> deflate(const std::vector<Scalar>& p, const Scalar& r) {
  const std::size_t n = p.size() - 1;
  std::vector<Scalar> q(n);
  Scalar carry = p[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = carry;
    carry = p[k] + carry * r;
  }
  return q;
}

void add_root(std::vector<Scalar>& out, const Scalar& r) {
  if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
}

mpz_class lcm_denominators(const std::vector<Scalar>& p) {
  mpz_class l = 1;
  for (const auto& s : p) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.im().get_den_mpz_t());
  }
  return l;
}

constexpr long kSearchRadiusCap = 3000;

}  // namespace

std::vector<Scalar> roots_in_field(std::vector<Scalar> p, bool& complete) {
  complete = true;
  std::vector<Scalar> out;
  trim(p);
  if (p.size() <= 1) return out;
  while (p.size() > 1 && p.front().is_zero()) {
    add_root(out, Scalar(0));
    p.erase(p.begin());
  }
  Scalar lead = p.back();
  for (auto& c : p) c /= lead;

  while (p.size() > 3) {
    // Monic with Gaussian rational coefficients: substitute t = y / D so the
    // polynomial in y is monic over Z[x]; its roots in Q(x) are Gaussian
    // integers dividing the constant term.
    const std::size_t n = p.size() - 1;
    mpz_class d = lcm_denominators(p);
    std::vector<Scalar> q(n + 1);
    mpz_class power = 1;
    for (std::size_t k = n + 1; k-- > 0;) {
      q[k] = p[k] * Scalar(mpq_class(power));
      power *= d;
    }
    mpz_class norm0 = q[0].re().get_num() * q[0].re().get_num() +
                      q[0].im().get_num() * q[0].im().get_num();
    mpz_class radius;
    mpz_sqrt(radius.get_mpz_t(), norm0.get_mpz_t());
    if (radius > kSearchRadiusCap) {
      complete = false;
      return out;
    }
    long r = radius.get_si();
    bool found = false;
    for (long u = -r; u <= r && !found; ++u)
      for (long v = -r; v <= r && !found; ++v) {
        mpz_class nn = u * u + v * v;
        if (nn == 0 || nn > norm0) continue;
        if (norm0 % nn != 0) continue;
        Scalar y{mpq_class(u), mpq_class(v)};
        if (eval(q, y).is_zero()) {
          Scalar root = y / Scalar(mpq_class(d));
          add_root(out, root);
          p = deflate(p, root);
          found = true;
        }
      }
    if (!found) return out;  // no further roots in the field: search was exhaustive
  }
  if (p.size() == 2) {
    add_root(out, -p[0]);
  } else if (p.size() == 3) {
    Scalar disc = p[1] * p[1] - Scalar(4) * p[0];
    if (auto s = exact_sqrt(disc)) {
      add_root(out, (-p[1] + *s) / Scalar(2));
      add_root(out, (-p[1] - *s) / Scalar(2));
    }
  }
  return out;
}

SparseVec SparseVec::from_map(const std::map<std::size_t, Scalar>& m) {
  SparseVec v;
  v.entries.reserve(m.size());
  for (const auto& [k, s] : m)
    if (!s.is_zero()) v.entries.emplace_back(k, s);
  return v;
}

void SparseVec::axpy(const Scalar& f, const SparseVec& other) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  out.reserve(entries.size() + other.entries.size());
  auto i = entries.begin();
  auto j = other.entries.begin();
  while (i != entries.end() || j != other.entries.end()) {
    if (j == other.entries.end() || (i != entries.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == entries.end() || j->first < i->first) {
      out.emplace_back(j->first, f * j->second);
      ++j;
    } else {
      Scalar s = i->second + f * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries = std::move(out);
}

void EchelonBasis::reduce(SparseVec& v) const {
  // Subtracting a row clears the current lead and only touches larger indices,
  // so a single forward sweep over the leads suffices.
  std::size_t pos = 0;
  while (pos < v.entries.size()) {
    auto it = rows_.find(v.entries[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Scalar f = -v.entries[pos].second;
    v.axpy(f, it->second);
  }
}

bool EchelonBasis::insert(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  Scalar inv = v.entries.front().second.inverse();
  for (auto& e : v.entries) e.second *= inv;
  std::size_t pivot = v.entries.front().first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool EchelonBasis::contains(SparseVec v) const {
  reduce(v);
  return v.empty();
}

}  // namespace hopflift
