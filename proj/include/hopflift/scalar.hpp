#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopflift {

/// Element re + im*x of Q(x), x^2 = -1.
///
/// Both parts are canonical GMP rationals, so equality is structural and every
/// value has exactly one printed form.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);
  Scalar(long num, long den);

  static Scalar xi() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses the DSL scalar syntax: rationals `p/q`, `x` for the root of unity,
  /// `+ - * /`, parentheses and integer powers `^n`.
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_rational() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// Field norm re^2 + im^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  /// Canonical text, e.g. `0`, `-3/4`, `x`, `1/2-1/2*x`.
  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Arbitrary but fixed total order, used only for deterministic containers.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
  }

  std::size_t hash() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar pow(Scalar base, unsigned exp);

/// True iff w * w == v. Q(x) is not closed under square roots, so callers that
/// need a root supply it and get it checked here.
bool sqrt_witness(const Scalar& v, const Scalar& w);

/// A square root of v inside Q(x), if one exists.
std::optional<Scalar> exact_sqrt(const Scalar& v);

/// Square root of a non-negative rational, if rational.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hopflift

template <>
struct std::hash<hopflift::Scalar> {
  std::size_t operator()(const hopflift::Scalar& s) const noexcept { return s.hash(); }
};
