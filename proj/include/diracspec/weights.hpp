#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diracspec/rational.hpp"

namespace diracspec {

// A weight in ambient coordinates of a fixed Cartan subalgebra. Roots,
// half sums of roots and Harish-Chandra parameters are all WeightVectors.
class WeightVector
{
public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> coords)
  : coords_(std::move(coords))
  {}
  WeightVector(std::initializer_list<Rational> coords)
  : coords_(coords)
  {}

  static WeightVector zero(std::size_t n) { return WeightVector(std::vector<Rational>(n)); }
  static WeightVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const Rational &operator[](std::size_t i) const { return coords_[i]; }
  Rational &operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational> &coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  WeightVector &operator+=(const WeightVector &rhs);
  WeightVector &operator-=(const WeightVector &rhs);
  WeightVector &operator*=(const Rational &s);

  friend WeightVector operator+(WeightVector a, const WeightVector &b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector &b) { return a -= b; }
  friend WeightVector operator*(const Rational &s, WeightVector v) { return v *= s; }
  friend WeightVector operator*(WeightVector v, const Rational &s) { return v *= s; }
  WeightVector operator-() const;

  friend bool operator==(const WeightVector &, const WeightVector &) = default;
  friend auto operator<=>(const WeightVector &a, const WeightVector &b)
  {
    return a.coords_ <=> b.coords_;
  }

  // "(1, -1/2, 0)"
  std::string str() const;
  std::size_t hash() const noexcept;

  // Concatenation of coordinates, used for products of spaces.
  static WeightVector concat(const WeightVector &a, const WeightVector &b);

private:
  std::vector<Rational> coords_;
};

struct WeightHash
{
  std::size_t operator()(const WeightVector &v) const noexcept { return v.hash(); }
};

// Standard coordinate dot product. Throws DimensionError on length mismatch.
Rational inner(const WeightVector &u, const WeightVector &v);

inline Rational norm2(const WeightVector &v) { return inner(v, v); }

// s_alpha(v) = v - 2<v,alpha>/<alpha,alpha> alpha. Throws InvalidRootError for alpha = 0.
WeightVector reflect(const WeightVector &v, const WeightVector &alpha);

// 2<v,alpha>/<alpha,alpha>
Rational coroot_pairing(const WeightVector &v, const WeightVector &alpha);

// True iff no root in `roots` is orthogonal to lambda.
bool is_regular(const WeightVector &lambda, std::span<const WeightVector> roots);

// True iff 2<alpha,kappa>/<alpha,alpha> is an integer for every alpha.
bool is_algebraically_integral(const WeightVector &kappa,
                               std::span<const WeightVector> positive_roots);

// Weight lattice given by a basis in ambient coordinates. When
// allow_half_shift is set the lattice has been enlarged for a double cover
// to generators + Z*half_shift, where 2*half_shift already lies in the
// lattice spanned by the generators.
class LatticeSpec
{
public:
  LatticeSpec() = default;
  // Throws DomainError if the generators are linearly dependent.
  explicit LatticeSpec(std::vector<WeightVector> generators,
                       bool allow_half_shift = false,
                       WeightVector half_shift = {});

  static LatticeSpec standard(std::size_t n);

  const std::vector<WeightVector> &generators() const { return generators_; }
  bool allow_half_shift() const { return allow_half_shift_; }
  const WeightVector &half_shift() const { return half_shift_; }

  // Integer combination of generators only, ignoring the shift.
  bool contains_unshifted(const WeightVector &v) const;

  static LatticeSpec direct_sum(const LatticeSpec &a, const LatticeSpec &b);

private:
  std::vector<WeightVector> generators_;
  bool allow_half_shift_ = false;
  WeightVector half_shift_;
};

bool in_lattice(const WeightVector &v, const LatticeSpec &lattice);

namespace linalg {

// Coefficients c with sum c_i basis_i = v, if v lies in the rational span.
// The basis must be linearly independent.
std::optional<std::vector<Rational>> solve_in_span(std::span<const WeightVector> basis,
                                                   const WeightVector &v);

std::size_t rank(std::span<const WeightVector> vectors);

// Row-major square matrix.
using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix m);

// Solves m x = b for square invertible m; nullopt when singular.
std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> b);

} // namespace linalg

} // namespace diracspec
