#include "diracspec/decision.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "diracspec/errors.hpp"

namespace diracspec {

const std::string &factor_name(const Factor &f)
{
  if (auto sp = std::get_if<SymmetricPair>(&f))
    return sp->name();
  return std::get<UnequalRankStub>(f).name;
}

int factor_rank(const Factor &f)
{
  if (auto sp = std::get_if<SymmetricPair>(&f))
    return static_cast<int>(sp->rank());
  return std::get<UnequalRankStub>(f).rank_g;
}

std::string SpaceDescriptor::name() const
{
  std::string n;
  for (auto const &f : factors)
    n += (n.empty() ? "" : " x ") + factor_name(f);
  return n;
}

std::string_view to_string(Verdict v)
{
  switch (v) {
  case Verdict::EmptyPointSpectrum:
    return "EmptyPointSpectrum";
  case Verdict::PointSpectrumIsZeroOnly:
    return "PointSpectrumIsZeroOnly";
  }
  return "?";
}

std::string_view to_string(Reason r)
{
  switch (r) {
  case Reason::UnequalRank:
    return "UnequalRank";
  case Reason::RhoKSingular:
    return "RhoKSingular";
  case Reason::RhoKRegular:
    return "RhoKRegular";
  }
  return "?";
}

std::string_view to_string(FamilyTag t)
{
  switch (t) {
  case FamilyTag::OddQuadric:
    return "odd-quadric";
  case FamilyTag::EvenLagrangianGrassmannian:
    return "even-lagrangian-grassmannian";
  case FamilyTag::OddComplexGrassmannian:
    return "odd-complex-grassmannian";
  case FamilyTag::Other:
    return "other";
  }
  return "?";
}

namespace {

template<typename E, std::size_t N>
E parse_enum(std::string_view s, const E (&values)[N], const char *what)
{
  for (E v : values)
    if (to_string(v) == s)
      return v;
  throw ParseError(0, std::string("unknown ") + what + " '" + std::string(s) + "'");
}

} // namespace

Verdict parse_verdict(std::string_view s)
{
  static constexpr Verdict all[] = {Verdict::EmptyPointSpectrum, Verdict::PointSpectrumIsZeroOnly};
  return parse_enum(s, all, "verdict");
}

Reason parse_reason(std::string_view s)
{
  static constexpr Reason all[] = {Reason::UnequalRank, Reason::RhoKSingular, Reason::RhoKRegular};
  return parse_enum(s, all, "reason");
}

FamilyTag parse_family_tag(std::string_view s)
{
  static constexpr FamilyTag all[] = {FamilyTag::OddQuadric, FamilyTag::EvenLagrangianGrassmannian,
                                      FamilyTag::OddComplexGrassmannian, FamilyTag::Other};
  return parse_enum(s, all, "family tag");
}

FamilyTag classify_irreducible(const SymmetricPair &sp)
{
  auto const &m = sp.meta();
  auto params = [&](std::size_t n) {
    if (m.parameters.size() != n)
      throw ClassificationError(m.name + ": expected " + std::to_string(n) + " parameters");
  };
  if (m.family == "AIII") {
    params(2);
    return (m.parameters[0] + m.parameters[1]) % 2 == 1 ? FamilyTag::OddComplexGrassmannian
                                                         : FamilyTag::Other;
  }
  if (m.family == "CI") {
    params(1);
    return m.parameters[0] % 2 == 0 ? FamilyTag::EvenLagrangianGrassmannian : FamilyTag::Other;
  }
  if (m.family == "BDI") {
    params(2);
    int p = m.parameters[0], q = m.parameters[1];
    bool quadric_odd = (p == 2 && q % 2 == 1) || (q == 2 && p % 2 == 1);
    return quadric_odd ? FamilyTag::OddQuadric : FamilyTag::Other;
  }
  if (m.family == "DIII" || m.family == "CII" || m.family == "exceptional")
    return FamilyTag::Other;
  throw ClassificationError("cannot classify '" + m.name + "' of family '" + m.family + "'");
}

AnalysisReport analyze(const SpaceDescriptor &space)
{
  if (space.factors.empty())
    throw DescriptorError("space has no factors");

  AnalysisReport report;
  report.space = space.name();
  bool hermitian = true;
  // a product is spin iff every factor is; one non-spin factor settles it
  bool spin_false = false, spin_unknown = false;
  bool unequal = false;
  std::vector<SymmetricPair> pairs;
  for (auto const &f : space.factors) {
    if (auto stub = std::get_if<UnequalRankStub>(&f)) {
      if (stub->rank_g < 1 || stub->rank_k < 0 || stub->dim_M < 1)
        throw DescriptorError(stub->name + ": malformed rank data");
      if (stub->rank_k >= stub->rank_g)
        throw DescriptorError(stub->name + ": a stub must have rk_g > rk_k; equal-rank factors need root data");
      unequal = true;
      hermitian = false;
      if (!stub->dual_is_spin)
        spin_unknown = true;
      else if (!*stub->dual_is_spin)
        spin_false = true;
      report.dim_M += stub->dim_M;
    } else {
      auto const &sp = std::get<SymmetricPair>(f);
      hermitian = hermitian && sp.meta().hermitian;
      spin_false = spin_false || !sp.meta().dual_is_spin;
      report.dim_M += sp.dim();
      pairs.push_back(sp);
    }
  }
  std::optional<bool> spin;
  if (spin_false)
    spin = false;
  else if (!spin_unknown)
    spin = true;
  report.corollary_flags = {hermitian, spin, report.dim_M % 4};

  if (space.factors.size() == 1) {
    if (auto sp = std::get_if<SymmetricPair>(&space.factors.front())) {
      try {
        report.classification = classify_irreducible(*sp);
      } catch (const ClassificationError &) {
        report.classification.reset();
      }
    } else {
      report.classification = FamilyTag::Other;
    }
  }

  auto check_classification = [&] {
    if (report.classification &&
        (report.verdict == Verdict::PointSpectrumIsZeroOnly) !=
          (*report.classification == FamilyTag::OddComplexGrassmannian))
      throw InternalError(report.space + ": verdict disagrees with the classification");
  };

  if (unequal) {
    report.verdict = Verdict::EmptyPointSpectrum;
    report.reason = Reason::UnequalRank;
    check_classification();
    return report;
  }

  SymmetricPair whole = SymmetricPair::product(pairs);
  report.genus = a_hat_number(whole);
  if (!is_regular(whole.rho_k(), whole.g().roots())) {
    report.verdict = Verdict::EmptyPointSpectrum;
    report.reason = Reason::RhoKSingular;
    check_classification();
    return report;
  }

  auto param = harish_chandra_param(whole, whole.rho_k());
  if (!param)
    throw InternalError(report.space + ": regular rho_k is not a Harish-Chandra parameter");
  report.verdict = Verdict::PointSpectrumIsZeroOnly;
  report.reason = Reason::RhoKRegular;
  WeightVector kappa = blattner(whole, *param);
  // multiplicity of the minimal K-type inside the spinor representation
  std::size_t copies = 0;
  for (auto const &w : enumerate_w_prime(whole))
    if (w.apply(whole.rho_g()) - whole.rho_k() == kappa)
      ++copies;
  if (copies == 0)
    throw InternalError(report.space + ": minimal K-type of rho_k is not a spinor K-type");
  report.kernel = KernelData{whole.rho_k(), kappa, param->w.word(), copies == 1};
  if (report.dim_M % 4 != 0)
    throw InternalError(report.space + ": point spectrum on a space of dimension " +
                        std::to_string(report.dim_M));
  check_classification();
  return report;
}

namespace {

SweepRow make_row(const Factor &f)
{
  SweepRow row;
  AnalysisReport r = analyze(SpaceDescriptor{{f}});
  row.name = factor_name(f);
  row.dim_M = r.dim_M;
  row.verdict = r.verdict;
  row.reason = r.reason;
  row.classification = r.classification;
  if (auto stub = std::get_if<UnequalRankStub>(&f)) {
    row.family = stub->family;
    row.rank_g = stub->rank_g;
    row.rank_k = stub->rank_k;
  } else {
    auto const &sp = std::get<SymmetricPair>(f);
    row.family = sp.meta().family;
    row.rank_g = row.rank_k = static_cast<int>(sp.rank());
    row.rho_k = sp.rho_k();
    row.rho_k_regular = r.genus->rho_k_regular;
    row.abs_a_hat = r.genus->abs_value();
  }
  return row;
}

} // namespace

SweepSummary sweep(std::span<const Factor> catalog, int max_rank, SweepOptions options)
{
  SweepSummary summary;
  summary.max_rank = max_rank;
  int limit = max_rank;
  if (max_rank > options.max_rank_guard) {
    limit = options.max_rank_guard;
    summary.truncated = true;
    summary.truncation_note = "max rank " + std::to_string(max_rank) + " clamped to guard " +
                              std::to_string(options.max_rank_guard);
  }

  std::vector<const Factor *> selected;
  for (auto const &f : catalog)
    if (factor_rank(f) <= limit)
      selected.push_back(&f);

  std::vector<std::optional<SweepRow>> rows(selected.size());
  std::vector<std::string> failures(selected.size());
  std::exception_ptr error;
  std::mutex error_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        rows[i] = make_row(*selected[i]);
      } catch (const ResourceError &e) {
        failures[i] = factor_name(*selected[i]) + ": " + e.what();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
      }
    }
  };
  unsigned n = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, selected.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i]) {
      summary.rows.push_back(std::move(*rows[i]));
    } else {
      summary.truncated = true;
      summary.truncation_note += (summary.truncation_note.empty() ? "" : "; ") + failures[i];
    }
  }
  return summary;
}

} // namespace diracspec
