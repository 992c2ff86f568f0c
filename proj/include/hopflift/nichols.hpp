#pragma once

// Nichols algebras of braided vector spaces through quantum symmetrizers.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopflift/linalg.hpp"
#include "hopflift/present.hpp"
#include "hopflift/ydmod.hpp"

namespace hopflift {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector space with a braiding on V (x) V; basis of V (x) V is e_i (x) e_j at
/// index i*dim + j.
struct BraidedSpace {
  std::size_t dim = 0;
  Mat braiding;

  static BraidedSpace of(const YDModule& m);
  /// Invertible and satisfies the braid equation.
  bool valid() const;
};

struct NicholsCaps {
  std::size_t max_degree = 8;
  std::size_t max_tensor_dim = 20000;
};

/// Bubble-sort reduced word of a permutation given in one-line notation
/// (perm[i] is the image of i); letters are 1-based simple transpositions.
std::vector<std::size_t> reduced_word(const std::vector<std::size_t>& perm);

/// Braid-group lift c_{i1} ... c_{ik} of a word, acting on V^{(x)n}.
Mat braid_lift(const BraidedSpace& v, std::size_t n, const std::vector<std::size_t>& word);

/// Sum over S_n of the lifts of the bubble-sort reduced words, as a dense
/// matrix. Throws ResourceError past the caps.
Mat symmetrizer(const BraidedSpace& v, std::size_t n, const NicholsCaps& caps = {});

/// Rank of the degree-n symmetrizer, computed column by column through the
/// factorization S_n = T_2 T_3 ... T_n with T_k = 1 + c_{k-1} + c_{k-1}c_{k-2} + ...
std::size_t symmetrizer_rank(const BraidedSpace& v, std::size_t n, const NicholsCaps& caps = {});

struct GradedDims {
  std::vector<std::size_t> dims;  // degrees 0.. ; ends with 0 when terminated
  bool terminated = false;
  std::size_t total() const;
};

/// Ranks of the symmetrizers up to max_degree, stopping after the first zero.
/// Degree n is spanned by T'_n(B_{n-1} (x) V), where B_{n-1} spans degree n-1
/// and T'_n = 1 + c_{n-1} + c_{n-2}c_{n-1} + ... + c_1...c_{n-1}.
GradedDims graded_dims(const BraidedSpace& v, std::size_t max_degree, const NicholsCaps& caps = {});
GradedDims graded_dims(const YDModule& m, std::size_t max_degree, const NicholsCaps& caps = {});

/// Basis of ker(id + c) in V (x) V as degree-2 polynomials over letters
/// 0..dim-1.
std::vector<Poly> quadratic_relations(const BraidedSpace& v);
std::vector<Poly> quadratic_relations(const YDModule& m);
/// Same relations rendered with the given generator names.
std::vector<std::string> quadratic_relation_strings(const YDModule& m, const std::vector<std::string>& names);

/// Graded dimensions of B(+parts) equal the convolution of the parts' series.
bool hilbert_factorization_check(const std::vector<YDModule>& parts, const NicholsCaps& caps = {});

/// Cauchy product of Hilbert series.
std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace hopflift
