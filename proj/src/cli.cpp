#include "diracspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "diracspec/catalog.hpp"
#include "diracspec/decision.hpp"
#include "diracspec/genus.hpp"
#include "diracspec/report_io.hpp"

namespace diracspec {

namespace {

std::string join(const std::vector<std::string> &tokens)
{
  std::string s;
  for (auto const &t : tokens)
    s += (s.empty() ? "" : " ") + t;
  return s;
}

SymmetricPair equal_rank_pair(const SpaceDescriptor &space)
{
  std::vector<SymmetricPair> pairs;
  for (auto const &f : space.factors) {
    if (auto stub = std::get_if<UnequalRankStub>(&f))
      throw DomainError("'" + stub->name + "' has rank_g > rank_k; no root data for this command");
    pairs.push_back(std::get<SymmetricPair>(f));
  }
  if (pairs.size() == 1)
    return pairs.front();
  return SymmetricPair::product(pairs);
}

std::vector<CatalogEntry> read_catalog(const std::string &path)
{
  if (path.empty())
    return load_catalog(default_catalog_source());
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot read catalog file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str());
}

} // namespace

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Point spectrum of the Dirac operator on symmetric spaces of noncompact type",
               "diracspec"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string catalog_path;
  app.add_option("--format", format, "Output format")
    ->check(CLI::IsMember({"text", "json"}))
    ->capture_default_str();
  app.add_option("--catalog", catalog_path, "Catalog file (default: built-in catalog)");

  std::vector<std::string> expr;
  auto *analyze_cmd = app.add_subcommand("analyze", "Decide the point spectrum of a space");
  analyze_cmd->add_option("space", expr, "Entry name or product 'A x B'")->required();
  auto *genus_cmd = app.add_subcommand("genus", "A-hat genus of the compact dual");
  genus_cmd->add_option("space", expr, "Entry name or product 'A x B'")->required();
  auto *ktypes_cmd = app.add_subcommand("ktypes", "K-type decomposition of the spinor representation");
  ktypes_cmd->add_option("space", expr, "Entry name or product 'A x B'")->required();

  int max_rank = 0;
  unsigned threads = 0;
  auto *sweep_cmd = app.add_subcommand("sweep", "Analyze every catalog entry up to a rank");
  sweep_cmd->add_option("--max-rank", max_rank, "Largest rank of G")
    ->required()
    ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

  auto *catalog_cmd = app.add_subcommand("catalog", "Catalog commands");
  catalog_cmd->require_subcommand(1);
  auto *list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool json = format == "json";
  std::vector<CatalogEntry> catalog;
  try {
    catalog = read_catalog(catalog_path);

    if (analyze_cmd->parsed()) {
      AnalysisReport report = analyze(parse_space_expression(join(expr), catalog));
      if (json)
        out << analysis_to_json(report) << '\n';
      else
        write_analysis_text(out, report);
    } else if (genus_cmd->parsed()) {
      SpaceDescriptor space = parse_space_expression(join(expr), catalog);
      SymmetricPair sp = equal_rank_pair(space);
      GenusReport g = a_hat_number(sp);
      if (json)
        out << genus_to_json(space.name(), g) << '\n';
      else
        write_genus_text(out, space.name(), g);
    } else if (ktypes_cmd->parsed()) {
      SymmetricPair sp = equal_rank_pair(parse_space_expression(join(expr), catalog));
      auto ktypes = spinor_decomposition(sp);
      if (json)
        out << ktypes_to_json(sp, ktypes) << '\n';
      else
        write_ktypes_text(out, sp, ktypes);
    } else if (sweep_cmd->parsed()) {
      auto factors = catalog_factors(catalog);
      SweepSummary summary = sweep(factors, max_rank, SweepOptions{8, threads});
      if (json)
        out << sweep_to_json(summary) << '\n';
      else
        write_sweep_text(out, summary);
    } else if (list_cmd->parsed()) {
      if (json)
        out << catalog_to_json(catalog) << '\n';
      else
        write_catalog_text(out, catalog);
    }
  } catch (const UnknownEntryError &e) {
    err << "error: " << e.what() << "\nknown entries:\n";
    for (auto const &entry : catalog)
      err << "  " << entry.name << '\n';
    err << "classical names such as AIII:p,q, CI:n, BDI:p,q, DIII:n, CII:p,q are built on demand\n";
    return 1;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

} // namespace diracspec
