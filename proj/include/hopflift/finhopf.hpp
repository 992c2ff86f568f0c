#pragma once

// Finite-dimensional Hopf algebras given by structure constants.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopflift/linalg.hpp"

namespace hopflift {

/// Coefficient vector over the basis of some HopfData.
using Element = Vec;

/// Sparse list of (basis index, coefficient).
using Terms = std::vector<std::pair<std::size_t, Scalar>>;

class HopfData {
 public:
  HopfData() = default;

  /// mul[(i*n + j)*n + k] is the coefficient of e_k in e_i e_j;
  /// comul[(i*n + j)*n + k] is the coefficient of e_j (x) e_k in Delta(e_i);
  /// antipode has S(e_j) in column j.
  HopfData(std::vector<std::string> basis_names, std::vector<Scalar> mul, Vec unit,
           std::vector<Scalar> comul, Vec counit, Mat antipode);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Scalar& mul(std::size_t i, std::size_t j, std::size_t k) const {
    return mul_[(i * dim() + j) * dim() + k];
  }
  const Scalar& comul(std::size_t i, std::size_t j, std::size_t k) const {
    return comul_[(i * dim() + j) * dim() + k];
  }
  const Vec& unit() const { return unit_; }
  const Vec& counit() const { return counit_; }
  const Mat& antipode() const { return antipode_; }

  /// Nonzero terms of e_i e_j.
  const Terms& product_terms(std::size_t i, std::size_t j) const { return prod_[i * dim() + j]; }
  /// Nonzero terms of Delta(e_i), indexed by j*dim + k.
  const Terms& coproduct_terms(std::size_t i) const { return cop_[i]; }

  /// Optional generator spelling: basis element i is the product of
  /// generators spelling(i) in order. Used to extend generator actions.
  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<std::vector<std::size_t>>& spelling() const { return spelling_; }
  void set_spelling(std::vector<std::string> gens, std::vector<std::vector<std::size_t>> spelling);

  Element basis(std::size_t i) const;
  Element multiply(const Element& x, const Element& y) const;
  /// Delta(x) as a vector over e_j (x) e_k, index j*dim + k.
  Vec coproduct(const Element& x) const;
  Scalar epsilon(const Element& x) const;
  Element apply_antipode(const Element& x) const { return antipode_ * x; }
  /// Matrix of left multiplication by x.
  Mat left_mult(const Element& x) const;

  friend bool operator==(const HopfData& a, const HopfData& b);

 private:
  void build_caches();

  std::vector<std::string> names_;
  std::vector<Scalar> mul_;
  Vec unit_;
  std::vector<Scalar> comul_;
  Vec counit_;
  Mat antipode_;
  std::vector<Terms> prod_;
  std::vector<Terms> cop_;
  std::vector<std::string> gens_;
  std::vector<std::vector<std::size_t>> spelling_;
};

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;  // basis indices of a violating tuple
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
};

/// The six axiom groups: associativity, unit, coassociativity, counit,
/// bialgebra compatibility, antipode. Exhaustive over basis tuples.
AxiomReport verify_axioms(const HopfData& h);

struct GroupLikes {
  std::vector<Element> elements;
  bool conclusive = true;
};

/// All group-like elements, found as characters of the dual algebra.
GroupLikes group_likes(const HopfData& h);

/// Basis of {x : Delta(x) = x (x) g + h (x) x}.
std::vector<Element> skew_primitives(const HopfData& hd, const Element& g, const Element& h);

/// f has f(e_j) in column j (rows index the basis of `to`).
bool check_hopf_morphism(const HopfData& from, const HopfData& to, const Mat& f);

/// Dual Hopf algebra on the dual basis.
HopfData dualize(const HopfData& h);

/// Group algebra of Z/n with basis g^0..g^{n-1}.
HopfData cyclic_group_algebra(std::size_t n);

}  // namespace hopflift
