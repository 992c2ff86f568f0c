#pragma once

// Yetter-Drinfeld modules over a HopfData: validation, braidings, direct sums
// and transfer to the dual category.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopflift/finhopf.hpp"

namespace hopflift {

/// Left module and left comodule. The action of basis element h is a
/// dim x dim matrix whose column j is h.v_j. The coaction matrix has shape
/// (dim H * dim V) x dim V; row g*dimV + i, column j holds the coefficient of
/// e_g (x) v_i in delta(v_j).
class YDModule {
 public:
  YDModule(std::shared_ptr<const HopfData> parent, std::vector<Mat> action, Mat coaction,
           std::string name = {});

  const HopfData& parent() const { return *parent_; }
  const std::shared_ptr<const HopfData>& parent_ptr() const { return parent_; }
  std::size_t dim() const { return static_cast<std::size_t>(coaction_.cols()); }
  const Mat& action(std::size_t h) const { return action_[h]; }
  const std::vector<Mat>& actions() const { return action_; }
  Mat action_of(const Element& h) const;
  const Mat& coaction() const { return coaction_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Sizes of the summands this module was assembled from (one block if simple).
  const std::vector<std::size_t>& blocks() const { return blocks_; }
  void set_blocks(std::vector<std::size_t> b) { blocks_ = std::move(b); }

 private:
  std::shared_ptr<const HopfData> parent_;
  std::vector<Mat> action_;
  Mat coaction_;
  std::string name_;
  std::vector<std::size_t> blocks_;
};

struct YDCheck {
  std::string identity;
  bool passed = true;
  std::string witness;
};

struct YDReport {
  std::vector<YDCheck> checks;
  bool ok() const;
  std::string first_failure() const;
};

class YDError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Module axioms, comodule axioms and the compatibility
/// delta(h.v) = h1 v(-1) S(h3) (x) h2.v(0), each over all basis pairs.
YDReport validate_yd(const YDModule& m);

/// Extends generator matrices along the parent's basis spelling and validates.
/// Throws YDError naming the violated identity.
YDModule build_yd(std::shared_ptr<const HopfData> parent,
                  const std::map<std::string, Mat>& generator_actions, const Mat& coaction,
                  std::string name = {});

/// c_{M,N}(m (x) n) = m(-1).n (x) m(0) as a (dimN dimM) x (dimM dimN) matrix.
/// Basis of M (x) N is m_j (x) n_k at index j*dimN + k.
Mat braiding(const YDModule& m, const YDModule& n);

/// (c (x) id)(id (x) c)(c (x) id) == (id (x) c)(c (x) id)(id (x) c) on V^{(x)3}.
bool satisfies_braid_equation(const Mat& c, std::size_t dim);

YDModule direct_sum(const std::vector<YDModule>& parts);

/// The same vector space as a Yetter-Drinfeld module over the dual:
/// f.v = f(S(v(-1))) v(0), delta(v) = sum_i S^{-1}(e^i) (x) e_i.v.
YDModule transfer_to_dual(const YDModule& m, std::shared_ptr<const HopfData> dual = nullptr);

/// c_{N,M} c_{M,N} == id.
bool is_involutive_pair(const YDModule& m, const YDModule& n);

/// Nonzero v with c(v (x) v) = v (x) v. Exact on every summand of dimension
/// at most two (projective line parametrisation); across summands only vectors
/// with entries in {0, 1, -1, x, -x} are tried, and only when dim V <= 6.
/// A nullopt result is not a finiteness proof.
std::optional<Vec> find_symmetric_vector(const YDModule& m);

}  // namespace hopflift
