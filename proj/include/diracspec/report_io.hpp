#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diracspec/catalog.hpp"
#include "diracspec/decision.hpp"
#include "diracspec/genus.hpp"
#include "diracspec/sympair.hpp"

namespace diracspec {

inline constexpr std::string_view analysis_schema = "diracspec.analysis/1";
inline constexpr std::string_view sweep_schema = "diracspec.sweep/1";
inline constexpr std::string_view genus_schema = "diracspec.genus/1";
inline constexpr std::string_view ktypes_schema = "diracspec.ktypes/1";
inline constexpr std::string_view catalog_schema = "diracspec.catalog/1";

// Structured (JSON) reports. Rationals are "num/den" strings, weights are
// arrays of them, Weyl words list simple reflections numbered from 1.
// See docs/report-schema.md.
std::string analysis_to_json(const AnalysisReport &report);
std::string sweep_to_json(const SweepSummary &summary);
std::string genus_to_json(const std::string &space, const GenusReport &genus);
std::string ktypes_to_json(const SymmetricPair &sp, std::span<const SpinorKType> ktypes);
std::string catalog_to_json(const std::vector<CatalogEntry> &catalog);

// Inverse of the writers above; throws ParseError on malformed input.
AnalysisReport analysis_from_json(std::string_view text);
SweepSummary sweep_from_json(std::string_view text);

void write_analysis_text(std::ostream &out, const AnalysisReport &report);
void write_sweep_text(std::ostream &out, const SweepSummary &summary);
void write_genus_text(std::ostream &out, const std::string &space, const GenusReport &genus);
void write_ktypes_text(std::ostream &out, const SymmetricPair &sp,
                       std::span<const SpinorKType> ktypes);
void write_catalog_text(std::ostream &out, const std::vector<CatalogEntry> &catalog);

} // namespace diracspec
