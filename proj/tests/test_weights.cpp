#include <doctest.h>

#include "diracspec/errors.hpp"
#include "diracspec/weights.hpp"

using namespace diracspec;

TEST_CASE("rationals stay in lowest terms")
{
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.fraction_str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(4, 2).fraction_str() == "2/1");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("inner products")
{
  CHECK(inner({1, 0, -1}, {1, 0, -1}) == 2);
  CHECK(inner({1, -1}, {1, -1}) == 2);
  // highest root of C_n against rho_k of U(n), scaled by two
  for (int n = 2; n <= 8; ++n) {
    std::vector<Rational> top(n), rk(n);
    top[0] = 1;
    top[n - 1] = 1;
    for (int i = 0; i < n; ++i)
      rk[i] = n - 1 - 2 * i;
    CHECK(inner(WeightVector(top), WeightVector(rk)) == 0);
  }
  CHECK_THROWS_AS(inner({1, 2}, {1, 2, 3}), DimensionError);
}

TEST_CASE("reflections")
{
  WeightVector a{1, -1, 0};
  CHECK(reflect(a, a) == -a);
  CHECK(reflect({1, 1, 5}, a) == WeightVector{1, 1, 5});
  CHECK(reflect({1, 0}, {1, -1}) == WeightVector{0, 1});
  CHECK(reflect({Rational(1, 2), 3}, {0, 2}) == WeightVector{Rational(1, 2), -3});
  CHECK_THROWS_AS(reflect({1, 0}, {0, 0}), InvalidRootError);
}

TEST_CASE("regularity")
{
  std::vector<WeightVector> a2 = {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
  CHECK_FALSE(is_regular(WeightVector::zero(3), a2));
  CHECK(is_regular({1, -1, 0}, a2));
  std::vector<WeightVector> c2 = {{1, -1}, {1, 1}, {2, 0}, {0, 2}};
  CHECK_FALSE(is_regular({1, -1}, c2));
  CHECK(is_regular({2, 1}, c2));
}

TEST_CASE("algebraic integrality")
{
  std::vector<WeightVector> a1 = {{1, -1}};
  CHECK(is_algebraically_integral(WeightVector::zero(2), a1));
  CHECK(is_algebraically_integral({Rational(1, 2), Rational(-1, 2)}, a1));
  CHECK_FALSE(is_algebraically_integral({Rational(1, 3), 0}, a1));
  std::vector<WeightVector> c2k = {{1, -1}};
  CHECK(is_algebraically_integral({Rational(3, 2), Rational(1, 2)}, c2k));
}

TEST_CASE("lattice membership")
{
  auto z2 = LatticeSpec::standard(2);
  CHECK(in_lattice(WeightVector::zero(2), z2));
  for (auto const &g : z2.generators())
    CHECK(in_lattice(g, z2));
  CHECK(in_lattice({3, -7}, z2));
  CHECK_FALSE(in_lattice({Rational(1, 2), Rational(1, 2)}, z2));

  LatticeSpec shifted({{1, 0}, {0, 1}}, true, {Rational(1, 2), Rational(1, 2)});
  CHECK(in_lattice({Rational(1, 2), Rational(1, 2)}, shifted));
  CHECK(in_lattice({Rational(3, 2), Rational(-1, 2)}, shifted));
  CHECK_FALSE(in_lattice({Rational(1, 2), 0}, shifted));

  // weight lattice of A_2 inside the trace-zero plane
  LatticeSpec a2({{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)},
                  {Rational(1, 3), Rational(1, 3), Rational(-2, 3)}});
  CHECK(in_lattice({1, -1, 0}, a2));
  CHECK_FALSE(in_lattice({Rational(1, 2), Rational(-1, 2), 0}, a2));
  CHECK_FALSE(in_lattice({1, 0, 0}, a2));

  CHECK_THROWS_AS(LatticeSpec({{1, 1}, {2, 2}}), DomainError);
}

TEST_CASE("exact linear algebra")
{
  linalg::Matrix m = {{2, 1}, {1, 1}};
  CHECK(linalg::determinant(m) == 1);
  auto x = linalg::solve(m, {3, 2});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(linalg::solve({{1, 2}, {2, 4}}, {1, 1}));

  std::vector<WeightVector> basis = {{1, -1, 0}, {0, 1, -1}};
  auto c = linalg::solve_in_span(basis, {1, 0, -1});
  REQUIRE(c);
  CHECK((*c)[0] == 1);
  CHECK((*c)[1] == 1);
  CHECK_FALSE(linalg::solve_in_span(basis, {1, 0, 0}));
  CHECK(linalg::rank(basis) == 2);
}
