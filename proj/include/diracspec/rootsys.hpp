#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "diracspec/weights.hpp"

namespace diracspec {

enum class ClassicalType { A, B, C, D };

// cartan[i][j] = 2<alpha_i, alpha_j> / <alpha_j, alpha_j>
using CartanMatrix = std::vector<std::vector<int>>;

inline constexpr std::size_t default_orbit_guard = 10'000'000;

// Element of a Weyl group, stored as a reduced word in the simple
// reflections of its root system together with the matrix of its action on
// ambient coordinates (column j is the image of e_j). Equality is matrix
// equality.
class WeylElement
{
public:
  WeylElement() = default;
  WeylElement(std::vector<int> word, linalg::Matrix action)
  : word_(std::move(word)), action_(std::move(action))
  {}

  static WeylElement identity(std::size_t ambient_rank);

  const std::vector<int> &word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  const linalg::Matrix &action() const { return action_; }

  WeightVector apply(const WeightVector &v) const;
  Rational determinant() const { return linalg::determinant(action_); }

  friend bool operator==(const WeylElement &a, const WeylElement &b)
  {
    return a.action_ == b.action_;
  }

private:
  std::vector<int> word_;
  linalg::Matrix action_;
};

// (-1)^length, which equals the determinant of the action.
int sign_of(const WeylElement &w);

class RootSystem
{
public:
  RootSystem() = default;

  // Generates all roots by closure of the simple roots under simple
  // reflections. Throws ConstructionError if the input is not a simple
  // system of a finite root system or if more than root_guard roots appear.
  static RootSystem from_simple_roots(std::size_t ambient_rank, std::vector<WeightVector> simple,
                                      std::size_t root_guard = 100'000);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return simple_.size(); }

  // Positive roots followed by their negatives, in the same order.
  const std::vector<WeightVector> &roots() const { return roots_; }
  const std::vector<WeightVector> &positive() const { return positive_; }
  const std::vector<WeightVector> &simple() const { return simple_; }
  const WeightVector &rho() const { return rho_; }

  // Coordinates of positive()[i] in the basis of simple roots.
  const std::vector<std::vector<std::int64_t>> &positive_coefficients() const
  {
    return positive_coefficients_;
  }

  bool contains(const WeightVector &v) const { return root_index_.count(v) != 0; }
  bool is_positive_root(const WeightVector &v) const;

  // Fundamental weights inside the span of the roots:
  // 2<omega_i, alpha_j>/<alpha_j, alpha_j> = delta_ij.
  const std::vector<WeightVector> &fundamental_weights() const { return fundamental_; }

  WeylElement element(std::vector<int> word) const;

  struct Dominated
  {
    WeightVector dominant;
    // lambda = w.apply(dominant), w given by a reduced word
    WeylElement w;
  };

  // Moves lambda into the closed dominant chamber by simple reflections.
  Dominated dominate(const WeightVector &lambda) const;

private:
  std::size_t ambient_rank_ = 0;
  std::vector<WeightVector> roots_;
  std::vector<WeightVector> positive_;
  std::vector<WeightVector> simple_;
  std::vector<std::vector<std::int64_t>> positive_coefficients_;
  std::vector<WeightVector> fundamental_;
  WeightVector rho_;
  std::unordered_map<WeightVector, std::size_t, WeightHash> root_index_;
};

// Standard ambient realizations: A_n on n+1 coordinates with roots e_i - e_j;
// B_n, C_n, D_n on n coordinates. D_2 is accepted and is reducible (A_1 x A_1).
RootSystem build_classical(ClassicalType type, int rank);

// Root system of a finite-type Cartan matrix, realized in exact rational
// Euclidean coordinates whose Gram matrix on simple roots matches the
// symmetrized Cartan matrix, shortest roots of squared length 2.
RootSystem build_from_cartan(const CartanMatrix &cartan);

CartanMatrix cartan_matrix(ClassicalType type, int rank);

bool is_dominant(const WeightVector &lambda, const RootSystem &rs, bool strict);

// Closure of {lambda} under simple reflections. Throws ResourceError when the
// orbit grows past guard.
std::vector<WeightVector> weyl_orbit(const WeightVector &lambda, const RootSystem &rs,
                                     std::size_t guard = default_orbit_guard);

// Weyl dimension formula prod <kappa + rho_k, alpha>/<rho_k, alpha> over
// the given positive roots.
std::int64_t weyl_dim(const WeightVector &kappa, std::span<const WeightVector> positive_roots,
                      const WeightVector &rho);

} // namespace diracspec
