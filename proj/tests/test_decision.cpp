#include <doctest.h>

#include "diracspec/decision.hpp"
#include "diracspec/errors.hpp"
#include "diracspec/families.hpp"

using namespace diracspec;

namespace {

SpaceDescriptor single(Factor f) { return SpaceDescriptor{{std::move(f)}}; }

UnequalRankStub sl3() { return UnequalRankStub{"AI:3", "AI", 2, 1, 5, std::nullopt}; }

} // namespace

TEST_CASE("complex projective plane dual has kernel")
{
  auto sp = aiii_pair(1, 2);
  auto r = analyze(single(sp));
  CHECK(r.space == "AIII:1,2");
  CHECK(r.dim_M == 4);
  CHECK(r.verdict == Verdict::PointSpectrumIsZeroOnly);
  CHECK(r.reason == Reason::RhoKRegular);
  REQUIRE(r.genus);
  CHECK(r.genus->abs_value() == Rational(1, 8));
  REQUIRE(r.kernel);
  CHECK(r.kernel->harish_chandra_param == sp.rho_k());
  CHECK(r.kernel->blattner == WeightVector{0, Rational(1, 2), Rational(-1, 2)});
  CHECK(r.kernel->multiplicity_one);
  CHECK(sp.g().element(r.kernel->witness_word).apply(sp.rho_g()) - sp.rho_k() == r.kernel->blattner);
  CHECK(r.classification == FamilyTag::OddComplexGrassmannian);
  CHECK(r.corollary_flags.hermitian);
  CHECK(r.corollary_flags.dual_spin == false);
  CHECK(r.corollary_flags.dim_mod_4 == 0);
}

TEST_CASE("Lagrangian Grassmannian duals have no point spectrum")
{
  auto r = analyze(single(ci_pair(2)));
  CHECK(r.verdict == Verdict::EmptyPointSpectrum);
  CHECK(r.reason == Reason::RhoKSingular);
  CHECK_FALSE(r.kernel);
  REQUIRE(r.genus);
  CHECK_FALSE(r.genus->nonzero);
  CHECK(r.classification == FamilyTag::EvenLagrangianGrassmannian);

  // all three necessary conditions hold and still no kernel
  for (int n : {4, 8}) {
    auto q = analyze(single(ci_pair(n)));
    CHECK(q.corollary_flags.hermitian);
    CHECK(q.corollary_flags.dual_spin == false);
    CHECK(q.corollary_flags.dim_mod_4 == 0);
    CHECK(q.verdict == Verdict::EmptyPointSpectrum);
  }
}

TEST_CASE("unequal rank short-circuits")
{
  auto r = analyze(single(sl3()));
  CHECK(r.verdict == Verdict::EmptyPointSpectrum);
  CHECK(r.reason == Reason::UnequalRank);
  CHECK_FALSE(r.genus);
  CHECK_FALSE(r.kernel);
  CHECK(r.dim_M == 5);
  CHECK_FALSE(r.corollary_flags.dual_spin.has_value());

  auto mixed = analyze(SpaceDescriptor{{aiii_pair(1, 2), sl3()}});
  CHECK(mixed.reason == Reason::UnequalRank);
  CHECK(mixed.dim_M == 9);
  CHECK_FALSE(mixed.classification);
}

TEST_CASE("products")
{
  auto both = analyze(SpaceDescriptor{{aiii_pair(1, 2), aiii_pair(2, 3)}});
  CHECK(both.verdict == Verdict::PointSpectrumIsZeroOnly);
  CHECK(both.space == "AIII:1,2 x AIII:2,3");
  CHECK(both.dim_M == 16);
  REQUIRE(both.genus);
  CHECK(both.genus->abs_value() == Rational(1, 8 * 1024));
  CHECK(both.kernel->multiplicity_one);

  auto one_singular = analyze(SpaceDescriptor{{aiii_pair(1, 2), ci_pair(2)}});
  CHECK(one_singular.verdict == Verdict::EmptyPointSpectrum);
  CHECK(one_singular.reason == Reason::RhoKSingular);
  CHECK(one_singular.genus->value_up_to_sign == 0);
  CHECK_FALSE(one_singular.classification);
}

TEST_CASE("malformed descriptors")
{
  CHECK_THROWS_AS(analyze(SpaceDescriptor{}), DescriptorError);
  CHECK_THROWS_AS(analyze(single(UnequalRankStub{"bad", "AI", 2, 2, 4, std::nullopt})), DescriptorError);
  CHECK_THROWS_AS(analyze(single(UnequalRankStub{"bad", "AI", 2, 1, 0, std::nullopt})), DescriptorError);
}

TEST_CASE("classification of irreducible pairs")
{
  CHECK(classify_irreducible(bdi_pair(2, 7)) == FamilyTag::OddQuadric);
  CHECK(classify_irreducible(bdi_pair(7, 2)) == FamilyTag::OddQuadric);
  CHECK(classify_irreducible(bdi_pair(2, 6)) == FamilyTag::Other);
  CHECK(classify_irreducible(bdi_pair(3, 4)) == FamilyTag::Other);
  CHECK(classify_irreducible(ci_pair(4)) == FamilyTag::EvenLagrangianGrassmannian);
  CHECK(classify_irreducible(ci_pair(5)) == FamilyTag::Other);
  CHECK(classify_irreducible(aiii_pair(2, 3)) == FamilyTag::OddComplexGrassmannian);
  CHECK(classify_irreducible(aiii_pair(2, 4)) == FamilyTag::Other);
  CHECK(classify_irreducible(diii_pair(5)) == FamilyTag::Other);
  CHECK(classify_irreducible(cii_pair(1, 2)) == FamilyTag::Other);
  CHECK_THROWS_AS(classify_irreducible(degenerate_pair(build_classical(ClassicalType::A, 2), "A2")),
                  ClassificationError);

  // odd quadric: genus vanishes for dimensional reasons
  auto q = analyze(single(bdi_pair(2, 7)));
  CHECK(q.dim_M == 14);
  CHECK(q.corollary_flags.dim_mod_4 == 2);
  CHECK(q.verdict == Verdict::EmptyPointSpectrum);
  auto g = analyze(single(aiii_pair(2, 3)));
  CHECK(g.verdict == Verdict::PointSpectrumIsZeroOnly);
  CHECK(g.genus->nonzero);
}

TEST_CASE("enum names round-trip")
{
  for (auto v : {Verdict::EmptyPointSpectrum, Verdict::PointSpectrumIsZeroOnly})
    CHECK(parse_verdict(to_string(v)) == v);
  for (auto r : {Reason::UnequalRank, Reason::RhoKSingular, Reason::RhoKRegular})
    CHECK(parse_reason(to_string(r)) == r);
  for (auto t : {FamilyTag::OddQuadric, FamilyTag::EvenLagrangianGrassmannian,
                 FamilyTag::OddComplexGrassmannian, FamilyTag::Other})
    CHECK(parse_family_tag(to_string(t)) == t);
  CHECK_THROWS_AS(parse_verdict("Maybe"), ParseError);
}

TEST_CASE("sweeps")
{
  CHECK(sweep({}, 4).rows.empty());

  std::vector<Factor> two = {aiii_pair(1, 2), ci_pair(2)};
  auto s = sweep(two, 4);
  REQUIRE(s.rows.size() == 2);
  CHECK(s.rows[0].verdict == Verdict::PointSpectrumIsZeroOnly);
  CHECK(s.rows[1].verdict == Verdict::EmptyPointSpectrum);
  CHECK(s.rows[0].abs_a_hat == Rational(1, 8));
  CHECK_FALSE(s.truncated);

  std::vector<Factor> catalog = {aiii_pair(1, 2), ci_pair(5), sl3(), aiii_pair(2, 3), bdi_pair(2, 5),
                                 aiii_pair(1, 5), ci_pair(3)};
  auto limited = sweep(catalog, 3);
  std::vector<std::string> names;
  for (auto const &r : limited.rows)
    names.push_back(r.name);
  CHECK(names == std::vector<std::string>{"AIII:1,2", "AI:3", "BDI:2,5", "CI:3"});

  auto serial = sweep(catalog, 6, SweepOptions{8, 1});
  auto parallel = sweep(catalog, 6, SweepOptions{8, 4});
  CHECK(serial == parallel);
  CHECK(serial.rows.size() == catalog.size());

  auto clamped = sweep(catalog, 20, SweepOptions{4, 2});
  CHECK(clamped.truncated);
  CHECK(clamped.truncation_note.find("clamped") != std::string::npos);
  CHECK(clamped.max_rank == 20);
  for (auto const &r : clamped.rows)
    CHECK(r.rank_g <= 4);
}

TEST_CASE("spin flag of products")
{
  UnequalRankStub unknown{"AI:3", "AI", 2, 1, 5, std::nullopt};
  UnequalRankStub spin{"AII:2", "AII", 3, 2, 5, true};
  CHECK(analyze(SpaceDescriptor{{aiii_pair(1, 3), spin}}).corollary_flags.dual_spin == true);
  CHECK_FALSE(analyze(SpaceDescriptor{{aiii_pair(1, 3), unknown}}).corollary_flags.dual_spin.has_value());
  CHECK(analyze(SpaceDescriptor{{aiii_pair(1, 2), unknown}}).corollary_flags.dual_spin == false);
  CHECK(analyze(SpaceDescriptor{{aiii_pair(1, 2), aiii_pair(1, 2)}}).corollary_flags.dual_spin == false);
}
