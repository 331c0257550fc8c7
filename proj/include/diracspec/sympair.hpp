#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diracspec/rootsys.hpp"
#include "diracspec/weights.hpp"

namespace diracspec {

// Classification inputs of a pair. hermitian and dual_is_spin are literature
// data; catalog loading cross-checks them against the root data.
struct PairMeta
{
  std::string name;
  std::string family;
  std::vector<int> parameters;
  bool hermitian = false;
  bool dual_is_spin = false;
  // 0 means "fill in from the root data".
  int dim_M = 0;
  std::string note;
};

// Equal-rank symmetric pair: the roots of g split into the compact roots of
// k and the noncompact roots p, relative to a Cartan subalgebra inside k.
class SymmetricPair
{
public:
  // Validates k_positive as the positive part of a graded sub-root-system of
  // g; throws ValidationError naming the violated invariant.
  static SymmetricPair make(RootSystem g, std::vector<WeightVector> k_positive, PairMeta meta);

  static SymmetricPair from_compact_roots(RootSystem g,
                                          const std::function<bool(const WeightVector &)> &is_compact,
                                          PairMeta meta);

  // Block-diagonal product on concatenated ambient coordinates.
  static SymmetricPair product(std::span<const SymmetricPair> factors);

  const RootSystem &g() const { return g_; }
  const RootSystem &k() const { return k_; }
  const std::vector<WeightVector> &k_positive() const { return k_positive_; }
  const std::vector<WeightVector> &p_positive() const { return p_positive_; }
  const WeightVector &rho_g() const { return g_.rho(); }
  const WeightVector &rho_k() const { return rho_k_; }
  // rho_g - rho_k, the half sum of positive noncompact roots
  const WeightVector &rho_p() const { return rho_p_; }
  const LatticeSpec &lattice() const { return lattice_; }
  const PairMeta &meta() const { return meta_; }
  const std::string &name() const { return meta_.name; }

  std::size_t rank() const { return g_.rank(); }
  int dim() const { return 2 * static_cast<int>(p_positive_.size()); }
  bool is_compact_root(const WeightVector &alpha) const { return k_.contains(alpha); }

  // k has a center iff its roots span less than the roots of g.
  bool computed_hermitian() const;
  // rho_p lies in the weight lattice of the simply connected compact dual.
  bool computed_dual_is_spin() const;

private:
  RootSystem g_;
  RootSystem k_;
  std::vector<WeightVector> k_positive_;
  std::vector<WeightVector> p_positive_;
  WeightVector rho_k_;
  WeightVector rho_p_;
  LatticeSpec lattice_;
  PairMeta meta_;
};

// K-type sigma^{w rho_g - rho_k} of the spinor representation.
struct SpinorKType
{
  WeylElement w;
  WeightVector highest_weight;
  int sign = 1;
  std::int64_t dim = 0;
};

struct DiscreteSeriesParam
{
  WeightVector lambda;
  WeylElement w;
  WeightVector blattner;
};

// W' = { w in W_g : w(P_g) in P_k }, ordered by (length, word).
std::vector<WeylElement> enumerate_w_prime(const SymmetricPair &sp,
                                           std::size_t guard = default_orbit_guard);

std::vector<SpinorKType> spinor_decomposition(const SymmetricPair &sp);

// The discrete series parameter with Harish-Chandra parameter lambda, if
// lambda is g-regular, k-dominant and lambda - w rho_g lies in the lattice.
std::optional<DiscreteSeriesParam> harish_chandra_param(const SymmetricPair &sp,
                                                        const WeightVector &lambda);

inline bool is_harish_chandra_param(const SymmetricPair &sp, const WeightVector &lambda)
{
  return harish_chandra_param(sp, lambda).has_value();
}

// lambda + w rho_g - 2 rho_k. Throws DomainError for an invalid param.
WeightVector blattner(const SymmetricPair &sp, const DiscreteSeriesParam &param);

// Roots alpha of g (positive and negative) with <w rho_g, alpha> > 0, in
// the order of g().roots().
std::vector<WeightVector> cone_generators(const SymmetricPair &sp, const WeylElement &w);

// Whether kappa_prime - blattner(param) is a nonnegative integer combination
// of cone_generators(sp, param.w).
bool ktype_cone_member(const SymmetricPair &sp, const WeightVector &kappa_prime,
                       const DiscreteSeriesParam &param);

struct InequalityCheck
{
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool equality = false;
};

// Exact evaluation of the three inequalities that force a contributing
// Harish-Chandra parameter to equal rho_k.
struct ProofInequalities
{
  // <lambda, w0 rho_g> <= <lambda, w rho_g>, equality iff w0 = w
  InequalityCheck translate_pairing;
  // 0 <= <lambda, sum n_alpha alpha>; lhs is 0, rhs the pairing
  InequalityCheck cone_pairing;
  // every cone generator pairs positively with lambda
  bool generators_positive = false;
  // <rho_k, lambda> <= |lambda||rho_k| <= |lambda|^2, compared through
  // squares. lhs = <rho_k, lambda>, rhs = |lambda|^2.
  InequalityCheck norm_bound;

  bool all_hold() const { return translate_pairing.holds && cone_pairing.holds && norm_bound.holds; }
  bool all_equal() const
  {
    return translate_pairing.equality && cone_pairing.equality && norm_bound.equality;
  }
};

// lambda must be g-regular and k-dominant with w its chamber element;
// cone_coefficients are nonnegative integers indexed like
// cone_generators(sp, w), empty meaning all zero.
ProofInequalities proof_inequalities(const SymmetricPair &sp, const WeightVector &lambda,
                                     const WeylElement &w0, const WeylElement &w,
                                     std::span<const std::int64_t> cone_coefficients = {});

// |W_g| computed as the orbit size of the regular element rho.
std::size_t weyl_group_order(const RootSystem &rs, std::size_t guard = default_orbit_guard);

} // namespace diracspec
