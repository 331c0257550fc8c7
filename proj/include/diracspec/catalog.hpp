#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diracspec/decision.hpp"
#include "diracspec/errors.hpp"

namespace diracspec {

enum class CatalogFamily { AIII, CI, BDI, DIII, CII, AI, AII, Exceptional, Custom };

std::string_view to_string(CatalogFamily f);
CatalogFamily parse_catalog_family(std::string_view s);

struct CatalogEntry
{
  std::string name;
  CatalogFamily family = CatalogFamily::Custom;
  std::vector<int> parameters;
  // validated pair, or a stub for unequal-rank spaces
  Factor space;
  std::string note;
  // first line of the entry's block in the source
  int line = 0;
};

// Raised when an expression names neither a catalog entry nor a
// constructible classical pair.
class UnknownEntryError : public Error
{
public:
  explicit UnknownEntryError(const std::string &name)
  : Error("unknown entry '" + name + "'"), name_(name)
  {}
  const std::string &name() const { return name_; }

private:
  std::string name_;
};

// Line-oriented "key = value" blocks separated by blank lines; '#' starts a
// comment line. See docs/catalog-format.md. Throws ParseError (with line
// number) or ValidationError (naming the violated invariant).
std::vector<CatalogEntry> load_catalog(std::string_view source);

// The committed default catalog (data/default.catalog).
std::string_view default_catalog_source();

const CatalogEntry *find_entry(const std::vector<CatalogEntry> &catalog, std::string_view name);

std::vector<Factor> catalog_factors(const std::vector<CatalogEntry> &catalog);

// "AIII:1,2", "CI:2 x AIII:1,2", ... Names are looked up in the catalog
// first; classical names "AIII:p,q", "CI:n", "BDI:p,q", "DIII:n", "CII:p,q"
// not in the catalog are constructed on the fly.
SpaceDescriptor parse_space_expression(std::string_view expr,
                                       const std::vector<CatalogEntry> &catalog);

} // namespace diracspec
