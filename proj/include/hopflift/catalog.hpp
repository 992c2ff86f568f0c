#pragma once

// Named objects: the Hopf algebra H, its automorphisms, simple Yetter-Drinfeld
// modules, their direct sums, and the lifted Hopf algebra families.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopflift/finhopf.hpp"
#include "hopflift/present.hpp"
#include "hopflift/ydmod.hpp"

namespace hopflift::catalog {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------------ H

/// DSL source of H on generators a, b, c, d.
std::string h_dsl();
const Presentation& h_presentation();
/// a^i b^j c^k d^l at index 8i + 4j + 2k + l.
const std::vector<Word>& h_basis();
std::shared_ptr<const HopfData> H();
std::shared_ptr<const HopfData> H_dual();
/// Element of H from an expression such as `(1/2)*(1+b*c)*d`.
Element h_element(const std::string& expr);

/// Structure constants from a DSL variant of H on the standard basis.
HopfData hopf_from_dsl(const std::string& dsl);

struct Mutation {
  std::string label;
  std::string dsl;
};
/// One variant of H per defining relation with that relation altered.
std::vector<Mutation> h_relation_mutations();

// ------------------------------------------------------------------ automorphisms

struct TauImages {
  std::string a, b, c, d;
};
/// Images of the generators under tau_k, k = 1..32.
TauImages tau_images(int k);
/// 16 x 16 matrix of tau_k on the monomial basis.
Mat tau(int k);
/// Matrix of the algebra map with the given generator images.
Mat algebra_map(const TauImages& images);

struct NamedCheck {
  std::string name;
  bool passed;
  std::string detail;
  bool required = true;  // informational checks do not affect ok()
};

struct AutReport {
  std::vector<NamedCheck> checks;
  std::size_t order = 0;
  bool ok() const;
};

AutReport automorphism_group_check();

// ------------------------------------------------------------------ modules

/// V1..V8 as k_{chi_{i,j,k,l}}.
YDModule V(int i);
/// M1..M20.
YDModule M(int j);
/// 1-dim module with trivial action and coaction.
YDModule trivial_module();
/// "V3", "M13", "trivial".
YDModule simple(const std::string& name);
std::vector<std::string> simple_names();

// ------------------------------------------------------------------ Omega

struct OmegaInfo {
  int index;
  /// Families 2..13: the four one-dimensional summands with multiplicities,
  /// then one two-dimensional summand. Family 1: V1..V8 with multiplicities.
  std::vector<std::string> multiplied;
  std::vector<std::string> fixed;
  int block;  // 14 or 15 for the two grouping blocks of the pairs, 0 otherwise
};

const OmegaInfo& omega_info(int index);
/// Direct sum; `n` holds the multiplicities of `multiplied` (empty = all ones
/// for families 1..13; ignored for the pairs).
YDModule omega(int index, const std::vector<int>& n = {});
/// Pairs (i, j) of Omega indices whose bosonizations share graded dimensions.
const std::vector<std::pair<int, int>>& same_series_pairs();

/// The cases of the tensor-product factorization list, as module-name pairs.
std::vector<std::pair<std::string, std::string>> involutive_cases();

// ------------------------------------------------------------------ liftings

/// Named parameter matrices (vectors are n x 1, scalars 1 x 1).
struct ParamSet {
  std::map<std::string, Mat> values;

  Scalar scalar(const std::string& name) const;
  const Mat& matrix(const std::string& name) const;
  bool has(const std::string& name) const { return values.count(name) > 0; }
  void set(const std::string& name, const Scalar& s);
  void set(const std::string& name, Mat m) { values[name] = std::move(m); }
};

struct FamilyInfo {
  std::string name;        // "U1", "U2", ...
  int omega;               // Omega index of the infinitesimal braiding
  std::size_t n_count;     // number of multiplicities (0 for fixed-size families)
  std::vector<std::string> params;
};

const std::vector<FamilyInfo>& families();
const FamilyInfo& family(const std::string& name);

/// Default multiplicities (all ones) for families with multiplicities.
std::vector<int> default_n(const FamilyInfo& f);
/// Parameter shapes for the given multiplicities, filled with zeros.
ParamSet zero_params(const FamilyInfo& f, const std::vector<int>& n);
/// Deterministic "generic" parameters with all entries nonzero.
ParamSet sample_params(const FamilyInfo& f, const std::vector<int>& n, int seed = 0);

/// DSL source of the family at the given multiplicities and parameters.
std::string lifting_dsl(const std::string& family, const std::vector<int>& n, const ParamSet& params);
Presentation lifting(const std::string& family, const std::vector<int>& n, const ParamSet& params);

/// Dimension predicted by the closed form for the family.
std::size_t expected_dimension(const std::string& family, const std::vector<int>& n);

// ------------------------------------------------------------------ bosonizations

/// Generator names of Omega_i: two-dimensional summands first as p1 p2 (and
/// q1 q2), then the one-dimensional V1..V8 as A..H with a running index,
/// grouped by letter.
std::vector<std::string> omega_generator_names(int index, const std::vector<int>& n = {});
/// T(Omega_i) modulo the kernel of the degree-2 symmetrizer.
Presentation nichols_quadratic(int index, const std::vector<int>& n = {});
/// Quadratic Nichols algebra of Omega_i smashed with H.
Presentation bosonization(int index, const std::vector<int>& n = {});

/// Result of inserting a constant into one degree-two relation of a
/// bosonization: the deformation is rejected when the perturbed relations are
/// inconsistent, not confluent, or incompatible with the coproduct.
struct DeformationProbe {
  std::string relation;
  std::string constant;
  bool rejected = false;
  std::string reason;
};
std::vector<DeformationProbe> deformation_probes(int index, const std::vector<int>& n = {});

// ------------------------------------------------------------------ isomorphisms

/// One allowed restriction of an isomorphism to H together with the matrices
/// and scalars of its action on the module generators. Matrices are named as
/// in the family's conditions (U1: "a".."h"; U2, U9: "e".."h"; scalars
/// "beta", "z", "z1", "z2", "beta1", "beta2" as 1 x 1 matrices).
struct IsoWitness {
  int tau = 1;
  std::map<std::string, Mat> values;

  const Mat& matrix(const std::string& name) const;
  Scalar scalar(const std::string& name) const;
};

/// Indices tau_k that may restrict an isomorphism of the family.
std::vector<int> iso_branches(const std::string& family, const std::vector<int>& n);
/// The matrix conditions for I ~ I' under the witness.
bool iso_condition(const std::string& family, const std::vector<int>& n, const ParamSet& I, const ParamSet& Iprime,
                   const IsoWitness& w);
/// Images of the generators of U(I) in U(I') for the witness.
std::map<std::string, Poly> induced_morphism(const std::string& family, const std::vector<int>& n,
                                             const Presentation& target, const IsoWitness& w);
/// A random witness for the branch and parameters I' together with the
/// parameters I that satisfy the conditions for it.
std::pair<IsoWitness, ParamSet> random_iso_instance(const std::string& family, const std::vector<int>& n, int tau,
                                                    const ParamSet& Iprime, unsigned seed);

}  // namespace hopflift::catalog
