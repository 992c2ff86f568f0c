#include "hopflift/scalar.hpp"

#include <sstream>

#include "hopflift/expr.hpp"

namespace hopflift {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(x)");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(x)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string Scalar::str() const {
  if (sgn(im_) == 0) return rational_str(re_);
  std::string imag;
  mpq_class a = abs(im_);
  if (a == 1) {
    imag = "x";
  } else {
    imag = rational_str(a) + "*x";
  }
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return rational_str(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::size_t Scalar::hash() const {
  std::hash<std::string> h;
  // Small values dominate; hashing the canonical limbs would be faster but this
  // is only used for memo keys built from exact values.
  return h(re_.get_str()) * 31u + h(im_.get_str());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar pow(Scalar base, unsigned exp) {
  Scalar r(1);
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

bool sqrt_witness(const Scalar& v, const Scalar& w) { return w * w == v; }

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num();
  mpz_class d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

std::optional<Scalar> exact_sqrt(const Scalar& v) {
  // (p + q x)^2 = v  <=>  p^2 - q^2 = re, 2pq = im; |v| = p^2 + q^2.
  if (v.is_zero()) return Scalar(0);
  auto modulus = rational_sqrt(v.norm());
  if (!modulus) return std::nullopt;
  auto p = rational_sqrt((*modulus + v.re()) / 2);
  if (!p) return std::nullopt;
  if (sgn(*p) == 0) {
    // v is a negative rational: root is q x with q^2 = -re.
    auto q = rational_sqrt(-v.re());
    if (!q) return std::nullopt;
    return Scalar(mpq_class(0), *q);
  }
  mpq_class q = v.im() / (2 * *p);
  Scalar w(*p, q);
  if (w * w != v) return std::nullopt;
  return w;
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct ScalarOps {
  using Value = Scalar;
  Value number(const std::string& digits) { return Scalar(mpq_class(mpz_class(digits))); }
  Value ident(const expr::Token& tok, const expr::Cursor& cur) {
    if (tok.text == "x") return Scalar::xi();
    cur.fail("unknown identifier '" + tok.text + "' in scalar");
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value neg(const Value& a) { return -a; }
  Value div(const Value& a, const Value& b, const expr::Cursor& cur) {
    if (b.is_zero()) cur.fail("division by zero");
    return a / b;
  }
  Value pow(const Value& a, unsigned e) { return hopflift::pow(a, e); }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  expr::Cursor cur(expr::tokenize(text, 1), 1);
  ScalarOps ops;
  expr::Parser<ScalarOps> p(cur, ops);
  Scalar v = p.sum();
  if (!cur.at(expr::Tok::End)) cur.fail("trailing input '" + cur.peek().text + "'");
  return v;
}

}  // namespace hopflift
