#pragma once

#include <span>

#include "diracspec/rational.hpp"
#include "diracspec/sympair.hpp"

namespace diracspec {

// A-hat number of the compact dual. The sign of value_up_to_sign depends on
// an orientation that is never fixed, so only abs_value() and the
// zero/nonzero verdict are orientation free.
struct GenusReport
{
  Rational value_up_to_sign;
  bool nonzero = false;
  // independent per-root orthogonality scan of rho_k
  bool rho_k_regular = false;

  Rational abs_value() const { return value_up_to_sign.abs(); }
  friend bool operator==(const GenusReport &, const GenusReport &) = default;
};

// prod over alpha in Delta_g^+ of <alpha, rho_k>/<alpha, rho_g>.
GenusReport a_hat_number(const SymmetricPair &sp);

// (-16)^{-n} binom(2n, n), the value on CP^{2n}.
Rational a_hat_cp_closed_form(int n);

GenusReport a_hat_product(std::span<const GenusReport> factors);

// The same root product restricted to a subset of positive roots.
Rational a_hat_partial_product(const SymmetricPair &sp, std::span<const WeightVector> roots);

} // namespace diracspec
