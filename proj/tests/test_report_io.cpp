#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "diracspec/catalog.hpp"
#include "diracspec/families.hpp"
#include "diracspec/report_io.hpp"

using namespace diracspec;
using nlohmann::json;

namespace {

std::vector<AnalysisReport> sample_reports()
{
  return {analyze(SpaceDescriptor{{aiii_pair(1, 2)}}), analyze(SpaceDescriptor{{ci_pair(2)}}),
          analyze(SpaceDescriptor{{UnequalRankStub{"AI:3", "AI", 2, 1, 5, std::nullopt}}}),
          analyze(SpaceDescriptor{{UnequalRankStub{"AII:2", "AII", 3, 2, 5, true}}}),
          analyze(SpaceDescriptor{{aiii_pair(1, 2), aiii_pair(2, 3)}}),
          analyze(SpaceDescriptor{{bdi_pair(2, 7)}})};
}

} // namespace

TEST_CASE("analysis reports round-trip exactly")
{
  for (auto const &r : sample_reports()) {
    CAPTURE(r.space);
    CHECK(analysis_from_json(analysis_to_json(r)) == r);
  }
}

TEST_CASE("rationals are exact strings")
{
  auto text = analysis_to_json(analyze(SpaceDescriptor{{aiii_pair(1, 2)}}));
  auto doc = json::parse(text);
  CHECK(doc["schema"] == "diracspec.analysis/1");
  CHECK(doc["genus"]["abs_value"] == "1/8");
  CHECK(doc["genus"]["value_up_to_sign"] == "-1/8");
  CHECK(doc["kernel"]["harish_chandra_param"] == json::array({"0/1", "1/2", "-1/2"}));
  CHECK(doc["kernel"]["witness_word"] == json::array({1}));
  CHECK(doc["classification"] == "odd-complex-grassmannian");
  CHECK(doc["corollary_flags"]["dual_spin"] == false);

  auto stub = json::parse(analysis_to_json(sample_reports()[2]));
  CHECK(stub["genus"].is_null());
  CHECK(stub["kernel"].is_null());
  CHECK(stub["corollary_flags"]["dual_spin"].is_null());
}

TEST_CASE("sweep summaries round-trip exactly")
{
  auto cat = load_catalog(default_catalog_source());
  auto factors = catalog_factors(cat);
  auto summary = sweep(factors, 8);
  REQUIRE(summary.rows.size() == cat.size());
  CHECK(sweep_from_json(sweep_to_json(summary)) == summary);

  SweepSummary truncated{3, {}, true, "max rank 9 clamped to guard 8"};
  CHECK(sweep_from_json(sweep_to_json(truncated)) == truncated);
}

TEST_CASE("malformed structured reports are rejected")
{
  auto good = json::parse(analysis_to_json(sample_reports()[0]));

  CHECK_THROWS_AS(analysis_from_json("{"), ParseError);
  CHECK_THROWS_AS(analysis_from_json("[]"), ParseError);

  auto wrong_schema = good;
  wrong_schema["schema"] = "diracspec.sweep/1";
  CHECK_THROWS_AS(analysis_from_json(wrong_schema.dump()), ParseError);

  auto missing = good;
  missing.erase("verdict");
  CHECK_THROWS_AS(analysis_from_json(missing.dump()), ParseError);

  auto decimal = good;
  decimal["genus"]["value_up_to_sign"] = -0.125;
  CHECK_THROWS_AS(analysis_from_json(decimal.dump()), ParseError);

  auto inconsistent = good;
  inconsistent["genus"]["abs_value"] = "1/4";
  CHECK_THROWS_AS(analysis_from_json(inconsistent.dump()), ParseError);

  auto bad_enum = good;
  bad_enum["reason"] = "Because";
  CHECK_THROWS_AS(analysis_from_json(bad_enum.dump()), ParseError);

  auto bad_word = good;
  bad_word["kernel"]["witness_word"] = json::array({0});
  CHECK_THROWS_AS(analysis_from_json(bad_word.dump()), ParseError);

  CHECK_THROWS_AS(sweep_from_json(R"({"schema":"diracspec.sweep/1","max_rank":2})"), ParseError);
}

TEST_CASE("text renderings")
{
  std::ostringstream a;
  write_analysis_text(a, sample_reports()[0]);
  CHECK(a.str().find("PointSpectrumIsZeroOnly") != std::string::npos);
  CHECK(a.str().find("1/8") != std::string::npos);

  std::ostringstream k;
  auto sp = aiii_pair(1, 2);
  auto ktypes = spinor_decomposition(sp);
  write_ktypes_text(k, sp, ktypes);
  CHECK(k.str().find("total dim 4, signed sum 0") != std::string::npos);

  auto kj = json::parse(ktypes_to_json(sp, ktypes));
  CHECK(kj["w_prime_size"] == 3);
  CHECK(kj["total_dim"] == 4);

  std::ostringstream s;
  write_sweep_text(s, SweepSummary{4, {}, true, "guard"});
  CHECK(s.str().find("TRUNCATED: guard") != std::string::npos);

  auto g = json::parse(genus_to_json("CP2", a_hat_number(sp)));
  CHECK(g["schema"] == "diracspec.genus/1");
  CHECK(g["abs_value"] == "1/8");
}
