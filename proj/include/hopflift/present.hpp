#pragma once

// Noncommutative presentations over Q(x): words, polynomials, a terminating
// rewriting system with overlap checking, basis enumeration and Hopf structure
// given on generators.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopflift/finhopf.hpp"
#include "hopflift/scalar.hpp"

namespace hopflift {

class YDModule;

enum class GenKind { group, module };

/// A word is a string of letter ids. Module letters get the smallest ids, in
/// the order they were declared, followed by the group letters.
using Word = std::string;

/// Linear combination of words.
struct Poly {
  std::map<Word, Scalar> terms;

  Poly() = default;
  Poly(const Scalar& c) { add(Word{}, c); }  // NOLINT(google-explicit-constructor)
  static Poly word(const Word& w, const Scalar& c = Scalar(1));

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Scalar& c);
  void add(const Poly& p, const Scalar& f = Scalar(1));
  /// Constant value if no nonempty word occurs.
  std::optional<Scalar> constant() const;

  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { a.add(b); return a; }
  friend Poly operator-(Poly a, const Poly& b) { a.add(b, Scalar(-1)); return a; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  /// Concatenation product, not reduced.
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
};

/// Element of a k-fold tensor power of the free algebra.
struct TensorPoly {
  std::size_t arity = 1;
  std::map<std::vector<Word>, Scalar> terms;

  TensorPoly() = default;
  explicit TensorPoly(std::size_t k) : arity(k) {}
  static TensorPoly from_poly(const Poly& p);
  static TensorPoly one(std::size_t k);

  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<Word>& w, const Scalar& c);
  void add(const TensorPoly& t, const Scalar& f = Scalar(1));
  Poly to_poly() const;  // requires arity 1
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);  // factorwise
  friend TensorPoly outer(const TensorPoly& a, const TensorPoly& b);
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.arity == b.arity && a.terms == b.terms;
  }
};

/// Compares by module-letter count, then the positions of the module letters,
/// then length, then the subsequence of module letters, then the whole word.
/// Letter precedence is the id order. Compatible with concatenation on both
/// sides and a well-order, so oriented rules always terminate.
class MonomialOrder {
 public:
  explicit MonomialOrder(std::size_t module_letters = 0) : m_(module_letters) {}
  int compare(const Word& u, const Word& v) const;
  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }
  std::size_t module_letters() const { return m_; }

 private:
  std::size_t m_;
};

struct Rule {
  Word lhs;
  Poly rhs;
};

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relation whose leading word is not the declared left-hand side.
class OrientationError : public PresentationError {
 public:
  using PresentationError::PresentationError;
};

/// Relations force 1 = 0.
class InconsistentError : public PresentationError {
 public:
  using PresentationError::PresentationError;
};

/// Rewriting ran past its step guard.
class RewriteLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rewriter;

class Presentation {
 public:
  std::size_t num_letters() const { return names_.size(); }
  std::size_t num_module_letters() const { return order_.module_letters(); }
  const std::string& name(char letter) const { return names_[static_cast<unsigned char>(letter)]; }
  const std::vector<std::string>& names() const { return names_; }
  GenKind kind(char letter) const;
  std::optional<char> letter(std::string_view name) const;
  /// Word from space-free generator names, e.g. {"p1", "a"}.
  Word word(const std::vector<std::string>& names) const;
  Poly gen(std::string_view name) const;

  const MonomialOrder& order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::map<std::string, Scalar>& params() const { return params_; }

  // Hopf structure on generators; absent entries mean "not declared".
  const std::map<char, TensorPoly>& coproducts() const { return delta_; }
  const std::map<char, Scalar>& counits() const { return eps_; }
  const std::map<char, Poly>& antipodes() const { return antipode_; }
  bool has_bialgebra_data() const;

  Poly normal_form(const Poly& p) const;
  Poly normal_form(const Word& w) const;
  TensorPoly normal_form(const TensorPoly& t) const;
  bool is_irreducible(const Word& w) const;

  /// DSL text for words and polynomials (leading term first).
  std::string str(const Word& w) const;
  std::string str(const Poly& p) const;
  std::string str(const TensorPoly& t) const;
  /// Full DSL source that parses back to an equal presentation.
  std::string dsl() const;

 private:
  friend class PresentationBuilder;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<Rule> rules_;
  std::map<std::string, Scalar> params_;
  std::map<char, TensorPoly> delta_;
  std::map<char, Scalar> eps_;
  std::map<char, Poly> antipode_;
  std::shared_ptr<Rewriter> rw_;
};

/// Programmatic construction. Relations are interreduced by their leading
/// words; oriented rules must already have their left-hand side leading.
class PresentationBuilder {
 public:
  PresentationBuilder(const std::vector<std::string>& group_gens,
                      const std::vector<std::string>& module_gens);

  const Presentation& scratch() const { return p_; }
  Poly gen(std::string_view name) const { return p_.gen(name); }
  void param(const std::string& name, const Scalar& value) { p_.params_[name] = value; }
  /// lhs - rhs = 0 with automatic orientation.
  void equation(const Poly& lhs_minus_rhs, const std::string& label = {});
  /// lhs -> rhs; throws OrientationError unless lhs is the leading word.
  void rule(const Word& lhs, const Poly& rhs, const std::string& label = {});
  void coproduct(std::string_view gen, const TensorPoly& value);
  void counit(std::string_view gen, const Scalar& value);
  void antipode(std::string_view gen, const Poly& value);
  Presentation build();

 private:
  void insert(Poly p, const std::string& label);
  char letter_or_throw(std::string_view name) const;

  Presentation p_;
  std::map<Word, Poly, std::greater<>> pivots_;  // monic, keyed by leading word
};

/// Line-oriented DSL:
///   gens: a b c d | p1 p2      group letters | module letters
///   param alpha = (1/2)*(1+x)
///   rel: q2*p1 -> -p1*q2 + alpha*(1 - b*c)
///   eq: p1*q2 + q2*p1 = alpha*(1 - b*c)
///   coprod: p1 = p1 @ 1 + b @ p1
///   counit: p1 = 0
///   antipode: p1 = -b*p1
/// Identifiers resolve to parameters, then generators, then `x`.
Presentation parse_presentation(std::string_view text);

/// One polynomial in the DSL expression syntax over the letters and
/// parameters of `p`.
Poly parse_poly(const Presentation& p, std::string_view text);

struct Overlap {
  Word word;
  std::size_t rule_a;
  std::size_t rule_b;
  bool inclusion;
  Poly difference;  // zero when the ambiguity resolves
};

struct OverlapReport {
  std::vector<Overlap> overlaps;
  bool confluent() const;
  std::size_t failures() const;
};

OverlapReport confluence_check(const Presentation& p);

struct BasisResult {
  std::vector<Word> words;
  bool complete = true;  // false: the word bound was hit
};

BasisResult enumerate_basis(const Presentation& p, std::size_t word_bound = 100000);

// Hopf structure on generators.

using GenTensorMap = std::map<char, TensorPoly>;
using GenScalarMap = std::map<char, Scalar>;
using GenPolyMap = std::map<char, Poly>;

/// Multiplicative extension of the generator data.
TensorPoly apply_coproduct(const Presentation& p, const GenTensorMap& delta, const Poly& x);
Scalar apply_counit(const GenScalarMap& eps, const Poly& x);
Poly apply_antipode(const Presentation& p, const GenPolyMap& s, const Poly& x);

struct CheckReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Delta and eps annihilate every relation; coassociativity and counit hold
/// on every generator.
CheckReport check_bialgebra_on_presentation(const Presentation& p, const GenTensorMap& delta,
                                            const GenScalarMap& eps);
CheckReport check_bialgebra_on_presentation(const Presentation& p);

/// Antipode on generators, solved from m(S (x) id)Delta = eps and verified on
/// both antipode identities and on every relation.
std::optional<GenPolyMap> find_antipode(const Presentation& p, const GenTensorMap& delta,
                                        const GenScalarMap& eps);
std::optional<GenPolyMap> find_antipode(const Presentation& p);

/// Images of P1's generators as polynomials over P2; missing generators map to
/// the same-named generator of P2.
CheckReport check_presented_morphism(const Presentation& from, const Presentation& to,
                                     const std::map<std::string, Poly>& images);

/// Finite-dimensional Hopf algebra on the given basis of irreducible words.
/// The antipode comes from the presentation if declared, otherwise it is solved.
HopfData hopf_data_from_presentation(const Presentation& p, const std::vector<Word>& basis);

/// Bosonization R#H: module letters of R, group letters and relations of
/// `h_pres`, and x h -> sum (h1.x) h2 for every group letter h and module
/// letter x, with the action read from `v` through `h` (whose basis must be
/// spelled by `h_pres`' group letters in `h.spelling()`). Module letters of R
/// name the basis of V in order.
Presentation smash_product(const Presentation& r, const Presentation& h_pres, const HopfData& h,
                           const YDModule& v);

/// First difference in the multiplication tables of two confluent
/// presentations over the same generator names: the basis words and the
/// normal forms of generator * basis word. Empty when they agree.
std::optional<std::string> compare_structure_constants(const Presentation& x, const Presentation& y);

/// Free algebra on V's basis modulo a list of relations (typically the
/// quadratic relations of the Nichols algebra), as a module-only presentation.
Presentation tensor_algebra_quotient(const std::vector<std::string>& module_gens,
                                     const std::vector<Poly>& relations);

}  // namespace hopflift
