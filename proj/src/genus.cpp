#include "diracspec/genus.hpp"

#include "diracspec/errors.hpp"

namespace diracspec {

Rational a_hat_partial_product(const SymmetricPair &sp, std::span<const WeightVector> roots)
{
  Rational value = 1;
  for (auto const &alpha : roots) {
    Rational den = inner(alpha, sp.rho_g());
    if (den.is_zero())
      throw DomainError("a_hat: root " + alpha.str() + " is orthogonal to rho_g");
    value *= inner(alpha, sp.rho_k()) / den;
  }
  return value;
}

GenusReport a_hat_number(const SymmetricPair &sp)
{
  GenusReport r;
  r.value_up_to_sign = a_hat_partial_product(sp, sp.g().positive());
  r.nonzero = !r.value_up_to_sign.is_zero();
  r.rho_k_regular = is_regular(sp.rho_k(), sp.g().roots());
  return r;
}

Rational a_hat_cp_closed_form(int n)
{
  if (n < 0)
    throw DomainError("a_hat_cp_closed_form: negative n");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  mpz_class pow16;
  mpz_ui_pow_ui(pow16.get_mpz_t(), 16, static_cast<unsigned long>(n));
  if (n % 2 == 1)
    pow16 = -pow16;
  return Rational(mpq_class(binom, pow16));
}

GenusReport a_hat_product(std::span<const GenusReport> factors)
{
  GenusReport r;
  r.value_up_to_sign = 1;
  r.rho_k_regular = true;
  for (auto const &f : factors) {
    r.value_up_to_sign *= f.value_up_to_sign;
    r.rho_k_regular = r.rho_k_regular && f.rho_k_regular;
  }
  r.nonzero = !r.value_up_to_sign.is_zero();
  return r;
}

} // namespace diracspec
