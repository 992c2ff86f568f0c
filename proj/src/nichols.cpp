#include "hopflift/nichols.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hopflift {

BraidedSpace BraidedSpace::of(const YDModule& m) { return {m.dim(), hopflift::braiding(m, m)}; }

bool BraidedSpace::valid() const {
  const auto d2 = static_cast<Index>(dim * dim);
  if (braiding.rows() != d2 || braiding.cols() != d2) return false;
  return exact_rank(braiding) == d2 && satisfies_braid_equation(braiding, dim);
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

void check_caps(const BraidedSpace& v, std::size_t n, const NicholsCaps& caps) {
  if (n > caps.max_degree)
    throw ResourceError("degree " + std::to_string(n) + " exceeds the degree cap " + std::to_string(caps.max_degree));
  // dim^n with overflow guard
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= std::max<std::size_t>(v.dim, 1);
    if (size > caps.max_tensor_dim)
      throw ResourceError("dim V^n = " + std::to_string(v.dim) + "^" + std::to_string(n) +
                          " exceeds the dimension cap " + std::to_string(caps.max_tensor_dim));
  }
}

using SparseMap = std::map<std::size_t, Scalar>;

// Braiding columns: for the pair (x, y) at index x*d + y, the nonzero (row, coef).
struct SparseBraiding {
  std::size_t d;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;

  explicit SparseBraiding(const BraidedSpace& v) : d(v.dim), cols(v.dim * v.dim) {
    for (std::size_t col = 0; col < d * d; ++col)
      for (std::size_t row = 0; row < d * d; ++row) {
        const Scalar& s = v.braiding(static_cast<Index>(row), static_cast<Index>(col));
        if (!s.is_zero()) cols[col].emplace_back(row, s);
      }
  }

  // c acting on tensor positions (k, k+1), 0-based, of V^{(x)n}.
  SparseMap apply(const SparseMap& vec, std::size_t n, std::size_t k) const {
    const std::size_t low = ipow(d, n - k - 2);  // weight of position k+1
    SparseMap out;
    for (const auto& [w, c] : vec) {
      std::size_t y = (w / low) % d;
      std::size_t x = (w / (low * d)) % d;
      std::size_t base = w - (x * d + y) * low;
      for (const auto& [row, s] : cols[x * d + y]) {
        Scalar& t = out[base + row * low];
        t += c * s;
      }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : ++it;
    return out;
  }
};

void add_into(SparseMap& acc, const SparseMap& v) {
  for (const auto& [k, c] : v) {
    Scalar& t = acc[k];
    t += c;
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second.is_zero() ? acc.erase(it) : ++it;
}

}  // namespace

std::vector<std::size_t> reduced_word(const std::vector<std::size_t>& perm) {
  // Bubble sort the one-line notation; each adjacent swap at positions
  // (i, i+1) is the letter i+1. The recorded swaps reversed give w.
  std::vector<std::size_t> p = perm;
  std::vector<std::size_t> swaps;
  for (std::size_t pass = 0; pass < p.size(); ++pass)
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        swaps.push_back(i + 1);
      }
  // p * s_{j1} ... s_{jk} = id, so p = s_{jk} ... s_{j1}.
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Mat braid_lift(const BraidedSpace& v, std::size_t n, const std::vector<std::size_t>& word) {
  const auto size = static_cast<Index>(ipow(v.dim, n));
  Mat out = Mat::Identity(size, size);
  for (std::size_t letter : word) {
    if (letter < 1 || letter >= n) throw std::invalid_argument("braid_lift: letter out of range");
    Mat left = Mat::Identity(static_cast<Index>(ipow(v.dim, letter - 1)), static_cast<Index>(ipow(v.dim, letter - 1)));
    Mat right =
        Mat::Identity(static_cast<Index>(ipow(v.dim, n - letter - 1)), static_cast<Index>(ipow(v.dim, n - letter - 1)));
    out = matmul(out, kron(kron(left, v.braiding), right));
  }
  return out;
}

Mat symmetrizer(const BraidedSpace& v, std::size_t n, const NicholsCaps& caps) {
  check_caps(v, n, caps);
  const auto size = static_cast<Index>(ipow(v.dim, n));
  if (n <= 1) return Mat::Identity(size, size);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Mat out = Mat::Zero(size, size);
  do {
    out += braid_lift(v, n, reduced_word(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::size_t symmetrizer_rank(const BraidedSpace& v, std::size_t n, const NicholsCaps& caps) {
  check_caps(v, n, caps);
  if (n <= 1) return ipow(v.dim, n);
  SparseBraiding c(v);
  const std::size_t size = ipow(v.dim, n);
  EchelonBasis basis;
  for (std::size_t w = 0; w < size; ++w) {
    SparseMap vec{{w, Scalar(1)}};
    // S_n = T_2 ... T_n; apply T_n first. T_k = 1 + c_{k-1}(1 + c_{k-2}(... (1 + c_1))).
    for (std::size_t k = n; k >= 2; --k) {
      SparseMap u = vec;
      for (std::size_t j = 1; j + 1 <= k - 1; ++j) {
        SparseMap next = vec;
        add_into(next, c.apply(u, n, j - 1));
        u = std::move(next);
      }
      SparseMap out = vec;
      add_into(out, c.apply(u, n, k - 2));
      vec = std::move(out);
    }
    basis.insert(SparseVec::from_map(vec));
  }
  return basis.rank();
}

std::size_t GradedDims::total() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

GradedDims graded_dims(const BraidedSpace& v, std::size_t max_degree, const NicholsCaps& caps) {
  GradedDims out;
  out.dims.push_back(1);
  if (max_degree == 0) return out;
  SparseBraiding c(v);
  const std::size_t d = v.dim;
  // Spanning set of the degree n-1 image.
  std::vector<SparseMap> prev;
  for (std::size_t i = 0; i < d; ++i) prev.push_back({{i, Scalar(1)}});
  out.dims.push_back(d);
  if (d == 0) {
    out.terminated = true;
    return out;
  }
  for (std::size_t n = 2; n <= max_degree; ++n) {
    check_caps(v, n, caps);
    EchelonBasis basis;
    std::vector<SparseMap> next;
    for (const SparseMap& b : prev)
      for (std::size_t i = 0; i < d; ++i) {
        SparseMap start;
        for (const auto& [w, s] : b) start.emplace(w * d + i, s);
        // T'_n = 1 + c_{n-1} + c_{n-2}c_{n-1} + ...
        SparseMap acc = start;
        SparseMap total = start;
        for (std::size_t k = n - 1; k >= 1; --k) {
          acc = c.apply(acc, n, k - 1);
          add_into(total, acc);
        }
        if (basis.insert(SparseVec::from_map(total))) next.push_back(std::move(total));
      }
    out.dims.push_back(next.size());
    if (next.empty()) {
      out.terminated = true;
      return out;
    }
    prev = std::move(next);
  }
  return out;
}

GradedDims graded_dims(const YDModule& m, std::size_t max_degree, const NicholsCaps& caps) {
  return graded_dims(BraidedSpace::of(m), max_degree, caps);
}

std::vector<Poly> quadratic_relations(const BraidedSpace& v) {
  const auto d2 = static_cast<Index>(v.dim * v.dim);
  Mat k = nullspace(Mat(Mat::Identity(d2, d2) + v.braiding));
  std::vector<Poly> out;
  for (Index col = 0; col < k.cols(); ++col) {
    Poly p;
    for (Index r = 0; r < d2; ++r) {
      if (k(r, col).is_zero()) continue;
      Word w;
      w += static_cast<char>(static_cast<std::size_t>(r) / v.dim);
      w += static_cast<char>(static_cast<std::size_t>(r) % v.dim);
      p.add(w, k(r, col));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poly> quadratic_relations(const YDModule& m) { return quadratic_relations(BraidedSpace::of(m)); }

std::vector<std::string> quadratic_relation_strings(const YDModule& m, const std::vector<std::string>& names) {
  if (names.size() != m.dim()) throw std::invalid_argument("one name per basis vector required");
  PresentationBuilder b({}, names);
  Presentation p = b.build();
  std::vector<std::string> out;
  for (const Poly& r : quadratic_relations(m)) out.push_back(p.str(r));
  return out;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (out.size() > 1 && out.back() == 0 && out[out.size() - 2] == 0) out.pop_back();
  return out;
}

bool hilbert_factorization_check(const std::vector<YDModule>& parts, const NicholsCaps& caps) {
  std::vector<std::size_t> product{1};
  std::size_t top = 0;
  for (const auto& m : parts) {
    GradedDims g = graded_dims(m, caps.max_degree, caps);
    if (!g.terminated)
      throw ResourceError("the series of " + m.name() + " does not terminate below the degree cap");
    product = convolve(product, g.dims);
    top += g.dims.size() - 2;  // last nonzero degree
  }
  GradedDims whole = graded_dims(direct_sum(parts), top + 1, caps);
  if (!whole.terminated) return false;
  std::vector<std::size_t> expect = product;
  while (!expect.empty() && expect.back() == 0) expect.pop_back();
  expect.push_back(0);
  return whole.dims == expect;
}

}  // namespace hopflift
