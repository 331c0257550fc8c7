#include <doctest.h>

#include "diracspec/families.hpp"
#include "diracspec/genus.hpp"

using namespace diracspec;

TEST_CASE("closed form on even complex projective spaces")
{
  CHECK(a_hat_cp_closed_form(0) == 1);
  CHECK(a_hat_cp_closed_form(1) == Rational(-1, 8));
  CHECK(a_hat_cp_closed_form(2) == Rational(3, 128));
  CHECK(a_hat_cp_closed_form(3) == Rational(-5, 1024));
  CHECK(a_hat_cp_closed_form(4) == Rational(35, 32768));
  CHECK(a_hat_cp_closed_form(5) == Rational(-63, 262144));
  CHECK(a_hat_cp_closed_form(6) == Rational(231, 4194304));
}

TEST_CASE("root product on complex projective spaces")
{
  auto cp2 = a_hat_number(aiii_pair(1, 2));
  CHECK(cp2.nonzero);
  CHECK(cp2.rho_k_regular);
  CHECK(cp2.abs_value() == Rational(1, 8));
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(a_hat_number(aiii_pair(1, 2 * n)).abs_value() == a_hat_cp_closed_form(n).abs());
  }
  // odd complex dimension: rho_k singular
  CHECK_FALSE(a_hat_number(aiii_pair(1, 3)).nonzero);
}

TEST_CASE("frozen values from an independent fraction oracle")
{
  // tests/oracle/weyl_bruteforce.py
  CHECK(a_hat_number(aiii_pair(2, 3)).abs_value() == Rational(1, 1024));
  CHECK(a_hat_number(aiii_pair(3, 4)).abs_value() == Rational(1, 2097152));
  CHECK(a_hat_number(aiii_pair(2, 2)).value_up_to_sign == 0);
}

TEST_CASE("Lagrangian Grassmannians have vanishing genus")
{
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    auto g = a_hat_number(ci_pair(n));
    CHECK(g.value_up_to_sign == 0);
    CHECK_FALSE(g.nonzero);
    CHECK_FALSE(g.rho_k_regular);
  }
}

TEST_CASE("degenerate pair has empty product")
{
  auto g = a_hat_number(degenerate_pair(build_classical(ClassicalType::D, 4), "D4"));
  CHECK(g.value_up_to_sign == 1);
  CHECK(g.nonzero);
  CHECK(g.rho_k_regular);
}

TEST_CASE("products of genera")
{
  auto one = a_hat_product({});
  CHECK(one.value_up_to_sign == 1);
  CHECK(one.nonzero);
  auto cp2 = a_hat_number(aiii_pair(1, 2));
  auto zero = a_hat_number(ci_pair(2));
  std::vector<GenusReport> with_zero = {cp2, zero};
  CHECK(a_hat_product(with_zero).value_up_to_sign == 0);
  CHECK_FALSE(a_hat_product(with_zero).nonzero);
  std::vector<GenusReport> squared = {cp2, cp2};
  CHECK(a_hat_product(squared).abs_value() == Rational(1, 64));

  // multiplicativity against the product pair
  std::vector<SymmetricPair> pairs = {aiii_pair(1, 2), aiii_pair(2, 3)};
  std::vector<GenusReport> reports = {a_hat_number(pairs[0]), a_hat_number(pairs[1])};
  CHECK(a_hat_number(SymmetricPair::product(pairs)).abs_value() == a_hat_product(reports).abs_value());
}

TEST_CASE("compact roots contribute trivially for Hermitian pairs")
{
  for (auto const &sp : {aiii_pair(1, 2), aiii_pair(2, 3), ci_pair(3), bdi_pair(2, 5), diii_pair(4)}) {
    CAPTURE(sp.name());
    CHECK(a_hat_partial_product(sp, sp.k_positive()) == 1);
    CHECK(a_hat_partial_product(sp, sp.p_positive()) == a_hat_number(sp).value_up_to_sign);
  }
}

TEST_CASE("zero, regularity and value agree")
{
  for (auto const &sp : {aiii_pair(1, 1), aiii_pair(1, 2), aiii_pair(2, 2), aiii_pair(2, 5), ci_pair(4),
                         bdi_pair(2, 3), bdi_pair(4, 4), bdi_pair(2, 6), diii_pair(3), cii_pair(1, 3)}) {
    CAPTURE(sp.name());
    auto g = a_hat_number(sp);
    CHECK(g.nonzero == g.rho_k_regular);
    CHECK(g.nonzero == !g.value_up_to_sign.is_zero());
    CHECK(g.nonzero == is_regular(sp.rho_k(), sp.g().roots()));
  }
}
