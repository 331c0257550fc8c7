#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diracspec/genus.hpp"
#include "diracspec/sympair.hpp"

namespace diracspec {

// A factor with rk(G) > rk(K). Only the ranks matter for the analysis.
struct UnequalRankStub
{
  std::string name;
  std::string family;
  int rank_g = 0;
  int rank_k = 0;
  int dim_M = 0;
  std::optional<bool> dual_is_spin;
};

using Factor = std::variant<SymmetricPair, UnequalRankStub>;

const std::string &factor_name(const Factor &f);
int factor_rank(const Factor &f);

// Possibly reducible space M = M_1 x ... x M_k.
struct SpaceDescriptor
{
  std::vector<Factor> factors;

  std::string name() const;
};

enum class Verdict { EmptyPointSpectrum, PointSpectrumIsZeroOnly };
enum class Reason { UnequalRank, RhoKSingular, RhoKRegular };

// The irreducible Hermitian symmetric spaces whose compact dual is not spin,
// plus everything else.
enum class FamilyTag {
  OddQuadric,                 // SO(n+2)/SO(2)xSO(n), n odd
  EvenLagrangianGrassmannian, // Sp(n)/U(n), n even
  OddComplexGrassmannian,     // U(p+q)/U(p)xU(q), p+q odd
  Other
};

std::string_view to_string(Verdict v);
std::string_view to_string(Reason r);
std::string_view to_string(FamilyTag t);
Verdict parse_verdict(std::string_view s);
Reason parse_reason(std::string_view s);
FamilyTag parse_family_tag(std::string_view s);

struct KernelData
{
  WeightVector harish_chandra_param;
  WeightVector blattner;
  std::vector<int> witness_word;
  bool multiplicity_one = true;

  friend bool operator==(const KernelData &, const KernelData &) = default;
};

struct CorollaryFlags
{
  bool hermitian = false;
  // unknown for unequal-rank stubs that do not declare it
  std::optional<bool> dual_spin;
  int dim_mod_4 = 0;

  friend bool operator==(const CorollaryFlags &, const CorollaryFlags &) = default;
};

struct AnalysisReport
{
  std::string space;
  int dim_M = 0;
  Verdict verdict = Verdict::EmptyPointSpectrum;
  Reason reason = Reason::UnequalRank;
  std::optional<GenusReport> genus;
  std::optional<KernelData> kernel;
  std::optional<FamilyTag> classification;
  CorollaryFlags corollary_flags;

  friend bool operator==(const AnalysisReport &, const AnalysisReport &) = default;
};

// Point spectrum of the untwisted Dirac operator on the noncompact space.
// The verdict has no state for a nonzero eigenvalue: the point spectrum is
// either empty or exactly {0}.
AnalysisReport analyze(const SpaceDescriptor &space);

// Throws ClassificationError for pairs outside the catalog families.
FamilyTag classify_irreducible(const SymmetricPair &sp);

struct SweepRow
{
  std::string name;
  std::string family;
  int rank_g = 0;
  int rank_k = 0;
  int dim_M = 0;
  std::optional<WeightVector> rho_k;
  std::optional<bool> rho_k_regular;
  std::optional<Rational> abs_a_hat;
  Verdict verdict = Verdict::EmptyPointSpectrum;
  Reason reason = Reason::UnequalRank;
  std::optional<FamilyTag> classification;

  friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

struct SweepSummary
{
  int max_rank = 0;
  std::vector<SweepRow> rows;
  bool truncated = false;
  std::string truncation_note;

  friend bool operator==(const SweepSummary &, const SweepSummary &) = default;
};

struct SweepOptions
{
  int max_rank_guard = 8;
  // 0 = hardware concurrency
  unsigned threads = 0;
};

// One row per catalog entry of rank <= max_rank, in catalog order.
SweepSummary sweep(std::span<const Factor> catalog, int max_rank, SweepOptions options = {});

} // namespace diracspec
