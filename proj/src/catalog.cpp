#include "diracspec/catalog.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "diracspec/families.hpp"

namespace diracspec {

std::string_view to_string(CatalogFamily f)
{
  switch (f) {
  case CatalogFamily::AIII:
    return "AIII";
  case CatalogFamily::CI:
    return "CI";
  case CatalogFamily::BDI:
    return "BDI";
  case CatalogFamily::DIII:
    return "DIII";
  case CatalogFamily::CII:
    return "CII";
  case CatalogFamily::AI:
    return "AI";
  case CatalogFamily::AII:
    return "AII";
  case CatalogFamily::Exceptional:
    return "exceptional";
  case CatalogFamily::Custom:
    return "custom";
  }
  return "?";
}

CatalogFamily parse_catalog_family(std::string_view s)
{
  for (auto f : {CatalogFamily::AIII, CatalogFamily::CI, CatalogFamily::BDI, CatalogFamily::DIII,
                 CatalogFamily::CII, CatalogFamily::AI, CatalogFamily::AII,
                 CatalogFamily::Exceptional, CatalogFamily::Custom})
    if (to_string(f) == s)
      return f;
  throw ParseError(0, "unknown family '" + std::string(s) + "'");
}

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

int parse_int(std::string_view s)
{
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(0, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<int> parse_ints(std::string_view s)
{
  std::vector<int> out;
  if (trim(s).empty())
    return out;
  for (auto part : split(s, ','))
    out.push_back(parse_int(part));
  return out;
}

bool parse_bool(std::string_view s)
{
  s = trim(s);
  if (s == "true" || s == "yes")
    return true;
  if (s == "false" || s == "no")
    return false;
  throw ParseError(0, "expected true/false, got '" + std::string(s) + "'");
}

WeightVector parse_weight(std::string_view s)
{
  std::vector<Rational> coords;
  for (auto part : split(s, ','))
    coords.push_back(Rational::parse(part));
  return WeightVector(std::move(coords));
}

CartanMatrix parse_cartan(std::string_view s)
{
  CartanMatrix m;
  for (auto row : split(s, ';'))
    if (!row.empty())
      m.push_back(parse_ints(row));
  return m;
}

struct Block
{
  int line = 0;
  std::map<std::string, std::pair<std::string, int>> fields;

  bool has(const std::string &key) const { return fields.count(key) != 0; }
  const std::string &get(const std::string &key) const { return fields.at(key).first; }
  int line_of(const std::string &key) const { return fields.at(key).second; }
};

// Parses one field, attaching its line number to any parse failure.
template <class Fn> auto parse_field(const Block &b, const std::string &key, Fn &&fn)
{
  try {
    return fn(b.get(key));
  } catch (const ParseError &e) {
    std::string what = e.what();
    if (e.line() != 0)
      throw;
    throw ParseError(b.line_of(key), what);
  } catch (const DomainError &e) {
    throw ParseError(b.line_of(key), e.what());
  }
}

const std::set<std::string> known_keys = {
  "name", "family", "construction", "params", "cartan", "marked", "hermitian", "dual_is_spin",
  "dim", "rho_k", "two_rho_k", "rank_g", "rank_k", "note"};

std::vector<Block> split_blocks(std::string_view source)
{
  std::vector<Block> blocks;
  std::optional<Block> current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto eol = source.find('\n', pos);
    std::string_view raw = source.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? source.size() + 1 : eol + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (current)
        blocks.push_back(std::move(*current));
      current.reset();
      continue;
    }
    if (line.front() == '#')
      continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(line_no, "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (!known_keys.count(key))
      throw ParseError(line_no, "unknown key '" + key + "'");
    if (!current) {
      current.emplace();
      current->line = line_no;
    }
    if (!current->fields.emplace(key, std::make_pair(value, line_no)).second)
      throw ParseError(line_no, "duplicate key '" + key + "'");
  }
  if (current)
    blocks.push_back(std::move(*current));
  return blocks;
}

bool is_classical(CatalogFamily f)
{
  return f == CatalogFamily::AIII || f == CatalogFamily::CI || f == CatalogFamily::BDI ||
         f == CatalogFamily::DIII || f == CatalogFamily::CII;
}

SymmetricPair classical_pair(CatalogFamily family, const std::vector<int> &params)
{
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw ParseError(0, std::string(to_string(family)) + " needs " + std::to_string(n) +
                            " parameter(s)");
  };
  switch (family) {
  case CatalogFamily::AIII:
    need(2);
    return aiii_pair(params[0], params[1]);
  case CatalogFamily::CI:
    need(1);
    return ci_pair(params[0]);
  case CatalogFamily::BDI:
    need(2);
    return bdi_pair(params[0], params[1]);
  case CatalogFamily::DIII:
    need(1);
    return diii_pair(params[0]);
  case CatalogFamily::CII:
    need(2);
    return cii_pair(params[0], params[1]);
  default:
    throw ParseError(0, "family " + std::string(to_string(family)) + " has no classical recipe");
  }
}

// Rebuilds the pair with the declared meta after comparing it with the
// root data.
SymmetricPair validate_pair(SymmetricPair sp, const Block &b, const std::string &name)
{
  auto fail = [&](const std::string &key, const std::string &invariant) {
    throw ValidationError("line " + std::to_string(b.line_of(key)) + ": entry '" + name +
                          "': " + invariant);
  };
  PairMeta meta = sp.meta();
  meta.name = name;
  if (b.has("hermitian")) {
    meta.hermitian = parse_field(b, "hermitian", parse_bool);
    if (meta.hermitian != sp.computed_hermitian())
      fail("hermitian", "declared hermitian = " + b.get("hermitian") +
                          " but the compact roots " +
                          (sp.computed_hermitian() ? "leave a center in k" : "span the full rank"));
  }
  if (b.has("dual_is_spin")) {
    meta.dual_is_spin = parse_field(b, "dual_is_spin", parse_bool);
    if (meta.dual_is_spin != sp.computed_dual_is_spin())
      fail("dual_is_spin", "declared dual_is_spin = " + b.get("dual_is_spin") +
                             " but rho_g - rho_k " +
                             (sp.computed_dual_is_spin() ? "lies" : "does not lie") +
                             " in the weight lattice");
  }
  if (meta.hermitian != sp.computed_hermitian())
    fail("name", "hermitian flag disagrees with the root data");
  if (meta.dual_is_spin != sp.computed_dual_is_spin())
    fail("name", "dual_is_spin flag disagrees with the root data");
  if (b.has("dim") && parse_field(b, "dim", parse_int) != sp.dim())
    fail("dim", "dim_M = 2|p_positive| violated: declared " + b.get("dim") + ", computed " +
                  std::to_string(sp.dim()));
  if (b.has("rho_k")) {
    WeightVector declared = parse_field(b, "rho_k", parse_weight);
    if (declared != sp.rho_k())
      fail("rho_k", "declared rho_k " + declared.str() + " differs from half the sum of k_positive " +
                      sp.rho_k().str());
  }
  if (b.has("two_rho_k")) {
    WeightVector declared = parse_field(b, "two_rho_k", parse_weight);
    if (declared != 2 * sp.rho_k())
      fail("two_rho_k", "declared two_rho_k " + declared.str() + " differs from the sum of k_positive " +
                          (2 * sp.rho_k()).str());
  }
  if (b.has("note"))
    meta.note = b.get("note");
  return SymmetricPair::make(sp.g(), sp.k_positive(), std::move(meta));
}

CatalogEntry build_entry(const Block &b)
{
  auto require = [&](const std::string &key) -> const std::string & {
    if (!b.has(key))
      throw ParseError(b.line, "entry is missing '" + key + "'");
    return b.get(key);
  };
  // required fields: presence first, then parse with the field's line
  auto field = [&](const std::string &key, auto &&fn) {
    require(key);
    return parse_field(b, key, fn);
  };

  CatalogEntry entry;
  entry.line = b.line;
  entry.name = require("name");
  require("family");
  entry.family = field("family", parse_catalog_family);
  if (b.has("params"))
    entry.parameters = field("params", parse_ints);
  if (b.has("note"))
    entry.note = b.get("note");

  std::string construction;
  if (b.has("construction"))
    construction = b.get("construction");
  else if (is_classical(entry.family))
    construction = "classical";
  else if (entry.family == CatalogFamily::AI || entry.family == CatalogFamily::AII)
    construction = "stub";
  else
    construction = "cartan";

  try {
    if (construction == "stub") {
      UnequalRankStub stub;
      stub.name = entry.name;
      stub.family = std::string(to_string(entry.family));
      stub.rank_g = field("rank_g", parse_int);
      stub.rank_k = field("rank_k", parse_int);
      stub.dim_M = field("dim", parse_int);
      if (b.has("dual_is_spin"))
        stub.dual_is_spin = field("dual_is_spin", parse_bool);
      if (stub.rank_g < 1 || stub.rank_k < 0 || stub.dim_M < 1)
        throw ValidationError("line " + std::to_string(b.line) + ": entry '" + entry.name +
                              "': stub ranks and dimension must be positive");
      if (stub.rank_k >= stub.rank_g)
        throw ValidationError("line " + std::to_string(b.line_of("rank_k")) + ": entry '" +
                              entry.name + "': stub must have rank_g > rank_k");
      entry.space = std::move(stub);
      return entry;
    }
    if (construction == "classical") {
      if (!is_classical(entry.family))
        throw ParseError(b.line, "family " + std::string(to_string(entry.family)) +
                                   " has no classical recipe");
      SymmetricPair sp = [&] {
        try {
          return classical_pair(entry.family, entry.parameters);
        } catch (const ParseError &e) {
          throw ParseError(b.has("params") ? b.line_of("params") : b.line, e.what());
        }
      }();
      entry.space = validate_pair(std::move(sp), b, entry.name);
      return entry;
    }
    if (construction == "cartan") {
      CartanMatrix cartan = field("cartan", parse_cartan);
      int marked = field("marked", parse_int);
      PairMeta meta;
      meta.name = entry.name;
      meta.family = std::string(to_string(entry.family));
      meta.parameters = entry.parameters;
      meta.hermitian = field("hermitian", parse_bool);
      meta.dual_is_spin =
        field("dual_is_spin", parse_bool);
      SymmetricPair sp = marked_cartan_pair(cartan, marked - 1, meta);
      entry.space = validate_pair(std::move(sp), b, entry.name);
      return entry;
    }
  } catch (const ConstructionError &e) {
    throw ValidationError("line " + std::to_string(b.line) + ": entry '" + entry.name + "': " +
                          e.what());
  } catch (const ValidationError &e) {
    std::string what = e.what();
    if (what.rfind("line ", 0) == 0)
      throw;
    throw ValidationError("line " + std::to_string(b.line) + ": entry '" + entry.name + "': " + what);
  }
  throw ParseError(b.line_of("construction"), "unknown construction '" + construction + "'");
}

} // namespace

std::vector<CatalogEntry> load_catalog(std::string_view source)
{
  std::vector<CatalogEntry> entries;
  std::set<std::string> names;
  for (auto const &block : split_blocks(source)) {
    CatalogEntry e = build_entry(block);
    if (!names.insert(e.name).second)
      throw ValidationError("line " + std::to_string(e.line) + ": duplicate entry '" + e.name + "'");
    entries.push_back(std::move(e));
  }
  return entries;
}

const CatalogEntry *find_entry(const std::vector<CatalogEntry> &catalog, std::string_view name)
{
  for (auto const &e : catalog)
    if (e.name == name)
      return &e;
  return nullptr;
}

std::vector<Factor> catalog_factors(const std::vector<CatalogEntry> &catalog)
{
  std::vector<Factor> out;
  out.reserve(catalog.size());
  for (auto const &e : catalog)
    out.push_back(e.space);
  return out;
}

SpaceDescriptor parse_space_expression(std::string_view expr,
                                       const std::vector<CatalogEntry> &catalog)
{
  std::istringstream in{std::string(expr)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;)
    tokens.push_back(t);
  if (tokens.empty())
    throw DescriptorError("empty space expression");

  SpaceDescriptor space;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i % 2 == 1) {
      if (tokens[i] != "x")
        throw DescriptorError("expected 'x' between factors, got '" + tokens[i] + "'");
      if (i + 1 == tokens.size())
        throw DescriptorError("dangling 'x' at end of expression");
      continue;
    }
    const std::string &name = tokens[i];
    if (auto e = find_entry(catalog, name)) {
      space.factors.push_back(e->space);
      continue;
    }
    auto colon = name.find(':');
    if (colon == std::string::npos)
      throw UnknownEntryError(name);
    CatalogFamily family;
    std::vector<int> params;
    try {
      family = parse_catalog_family(name.substr(0, colon));
      params = parse_ints(std::string_view(name).substr(colon + 1));
    } catch (const ParseError &) {
      throw UnknownEntryError(name);
    }
    if (!is_classical(family))
      throw UnknownEntryError(name);
    try {
      space.factors.push_back(classical_pair(family, params));
    } catch (const ParseError &e) {
      throw DescriptorError(name + ": " + e.what());
    } catch (const ConstructionError &e) {
      throw DescriptorError(name + ": " + e.what());
    }
  }
  return space;
}

} // namespace diracspec
