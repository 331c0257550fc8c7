#include "diracspec/report_io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace diracspec {

// insertion order keeps "schema" first and fields in documented order
using json = nlohmann::ordered_json;

namespace {

json rational_json(const Rational &r) { return r.fraction_str(); }

json weight_json(const WeightVector &v)
{
  json arr = json::array();
  for (auto const &c : v)
    arr.push_back(rational_json(c));
  return arr;
}

json word_json(const std::vector<int> &word)
{
  json arr = json::array();
  for (int s : word)
    arr.push_back(s + 1);
  return arr;
}

template <class T, class Fn> json optional_json(const std::optional<T> &v, Fn &&fn)
{
  return v ? fn(*v) : json(nullptr);
}

// Readers. Every failure surfaces as ParseError.
[[noreturn]] void bad(const std::string &what) { throw ParseError(0, "report: " + what); }

const json &member(const json &obj, const char *key)
{
  if (!obj.is_object())
    bad("expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string read_string(const json &j, const char *what)
{
  if (!j.is_string())
    bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

bool read_bool(const json &j, const char *what)
{
  if (!j.is_boolean())
    bad(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

int read_int(const json &j, const char *what)
{
  if (!j.is_number_integer())
    bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rational read_rational(const json &j, const char *what)
{
  try {
    return Rational::parse(read_string(j, what));
  } catch (const DomainError &e) {
    bad(std::string(what) + ": " + e.what());
  }
}

WeightVector read_weight(const json &j, const char *what)
{
  if (!j.is_array())
    bad(std::string(what) + " must be an array");
  std::vector<Rational> coords;
  for (auto const &c : j)
    coords.push_back(read_rational(c, what));
  return WeightVector(std::move(coords));
}

std::vector<int> read_word(const json &j)
{
  if (!j.is_array())
    bad("witness_word must be an array");
  std::vector<int> word;
  for (auto const &s : j) {
    int v = read_int(s, "witness_word entry");
    if (v < 1)
      bad("witness_word entries are numbered from 1");
    word.push_back(v - 1);
  }
  return word;
}

template <class Fn> auto read_optional(const json &j, Fn &&fn) -> std::optional<decltype(fn(j))>
{
  if (j.is_null())
    return std::nullopt;
  return fn(j);
}

template <class Fn> auto enum_field(const json &j, const char *what, Fn &&parse)
{
  try {
    return parse(read_string(j, what));
  } catch (const ParseError &e) {
    bad(e.what());
  }
}

json parse_document(std::string_view text, std::string_view schema)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    bad(e.what());
  }
  if (read_string(member(doc, "schema"), "schema") != schema)
    bad("expected schema " + std::string(schema));
  return doc;
}

json genus_json(const GenusReport &g)
{
  return {{"value_up_to_sign", rational_json(g.value_up_to_sign)},
          {"abs_value", rational_json(g.abs_value())},
          {"nonzero", g.nonzero},
          {"rho_k_regular", g.rho_k_regular}};
}

GenusReport read_genus(const json &j)
{
  GenusReport g;
  g.value_up_to_sign = read_rational(member(j, "value_up_to_sign"), "value_up_to_sign");
  g.nonzero = read_bool(member(j, "nonzero"), "nonzero");
  g.rho_k_regular = read_bool(member(j, "rho_k_regular"), "rho_k_regular");
  if (read_rational(member(j, "abs_value"), "abs_value") != g.abs_value())
    bad("abs_value disagrees with value_up_to_sign");
  return g;
}

json analysis_json(const AnalysisReport &r)
{
  json kernel = optional_json(r.kernel, [](const KernelData &k) {
    return json{{"harish_chandra_param", weight_json(k.harish_chandra_param)},
                {"blattner", weight_json(k.blattner)},
                {"witness_word", word_json(k.witness_word)},
                {"multiplicity_one", k.multiplicity_one}};
  });
  json flags = {{"hermitian", r.corollary_flags.hermitian},
                {"dual_spin", r.corollary_flags.dual_spin ? json(*r.corollary_flags.dual_spin)
                                                          : json(nullptr)},
                {"dim_mod_4", r.corollary_flags.dim_mod_4}};
  return {{"schema", analysis_schema},
          {"space", r.space},
          {"dim_M", r.dim_M},
          {"verdict", to_string(r.verdict)},
          {"reason", to_string(r.reason)},
          {"genus", optional_json(r.genus, genus_json)},
          {"kernel", kernel},
          {"classification",
           optional_json(r.classification, [](FamilyTag t) { return json(to_string(t)); })},
          {"corollary_flags", flags}};
}

json row_json(const SweepRow &row)
{
  return {{"name", row.name},
          {"family", row.family},
          {"rank_g", row.rank_g},
          {"rank_k", row.rank_k},
          {"dim_M", row.dim_M},
          {"rho_k", optional_json(row.rho_k, weight_json)},
          {"rho_k_regular", row.rho_k_regular ? json(*row.rho_k_regular) : json(nullptr)},
          {"abs_a_hat", optional_json(row.abs_a_hat, rational_json)},
          {"verdict", to_string(row.verdict)},
          {"reason", to_string(row.reason)},
          {"classification",
           optional_json(row.classification, [](FamilyTag t) { return json(to_string(t)); })}};
}

SweepRow read_row(const json &j)
{
  SweepRow row;
  row.name = read_string(member(j, "name"), "name");
  row.family = read_string(member(j, "family"), "family");
  row.rank_g = read_int(member(j, "rank_g"), "rank_g");
  row.rank_k = read_int(member(j, "rank_k"), "rank_k");
  row.dim_M = read_int(member(j, "dim_M"), "dim_M");
  row.rho_k = read_optional(member(j, "rho_k"), [](const json &v) { return read_weight(v, "rho_k"); });
  row.rho_k_regular = read_optional(member(j, "rho_k_regular"),
                                    [](const json &v) { return read_bool(v, "rho_k_regular"); });
  row.abs_a_hat = read_optional(member(j, "abs_a_hat"),
                                [](const json &v) { return read_rational(v, "abs_a_hat"); });
  row.verdict = enum_field(member(j, "verdict"), "verdict", parse_verdict);
  row.reason = enum_field(member(j, "reason"), "reason", parse_reason);
  row.classification = read_optional(member(j, "classification"), [](const json &v) {
    return enum_field(v, "classification", parse_family_tag);
  });
  return row;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string word_text(const std::vector<int> &word)
{
  if (word.empty())
    return "1";
  std::string s;
  for (int i : word) {
    if (!s.empty())
      s += ' ';
    s += 's' + std::to_string(i + 1);
  }
  return s;
}

// Left-aligned columns sized to the widest cell.
void write_table(std::ostream &out, const std::vector<std::vector<std::string>> &rows)
{
  if (rows.empty())
    return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (auto const &r : rows)
    for (std::size_t i = 0; i < r.size(); ++i)
      width[i] = std::max(width[i], r[i].size());
  for (auto const &r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size())
        line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    out << line << '\n';
  }
}

} // namespace

std::string analysis_to_json(const AnalysisReport &report) { return analysis_json(report).dump(2); }

AnalysisReport analysis_from_json(std::string_view text)
{
  json doc = parse_document(text, analysis_schema);
  AnalysisReport r;
  r.space = read_string(member(doc, "space"), "space");
  r.dim_M = read_int(member(doc, "dim_M"), "dim_M");
  r.verdict = enum_field(member(doc, "verdict"), "verdict", parse_verdict);
  r.reason = enum_field(member(doc, "reason"), "reason", parse_reason);
  r.genus = read_optional(member(doc, "genus"), read_genus);
  r.kernel = read_optional(member(doc, "kernel"), [](const json &k) {
    KernelData d;
    d.harish_chandra_param = read_weight(member(k, "harish_chandra_param"), "harish_chandra_param");
    d.blattner = read_weight(member(k, "blattner"), "blattner");
    d.witness_word = read_word(member(k, "witness_word"));
    d.multiplicity_one = read_bool(member(k, "multiplicity_one"), "multiplicity_one");
    return d;
  });
  r.classification = read_optional(member(doc, "classification"), [](const json &v) {
    return enum_field(v, "classification", parse_family_tag);
  });
  const json &flags = member(doc, "corollary_flags");
  r.corollary_flags.hermitian = read_bool(member(flags, "hermitian"), "hermitian");
  r.corollary_flags.dual_spin =
    read_optional(member(flags, "dual_spin"), [](const json &v) { return read_bool(v, "dual_spin"); });
  r.corollary_flags.dim_mod_4 = read_int(member(flags, "dim_mod_4"), "dim_mod_4");
  return r;
}

std::string sweep_to_json(const SweepSummary &summary)
{
  json rows = json::array();
  for (auto const &row : summary.rows)
    rows.push_back(row_json(row));
  json doc = {{"schema", sweep_schema},
              {"max_rank", summary.max_rank},
              {"truncated", summary.truncated},
              {"truncation_note", summary.truncation_note},
              {"rows", rows}};
  return doc.dump(2);
}

SweepSummary sweep_from_json(std::string_view text)
{
  json doc = parse_document(text, sweep_schema);
  SweepSummary s;
  s.max_rank = read_int(member(doc, "max_rank"), "max_rank");
  s.truncated = read_bool(member(doc, "truncated"), "truncated");
  s.truncation_note = read_string(member(doc, "truncation_note"), "truncation_note");
  const json &rows = member(doc, "rows");
  if (!rows.is_array())
    bad("rows must be an array");
  for (auto const &row : rows)
    s.rows.push_back(read_row(row));
  return s;
}

std::string genus_to_json(const std::string &space, const GenusReport &genus)
{
  json doc = genus_json(genus);
  doc["schema"] = genus_schema;
  doc["space"] = space;
  return doc.dump(2);
}

std::string ktypes_to_json(const SymmetricPair &sp, std::span<const SpinorKType> ktypes)
{
  json list = json::array();
  std::int64_t total = 0, signed_total = 0;
  for (auto const &t : ktypes) {
    list.push_back({{"word", word_json(t.w.word())},
                    {"length", t.w.length()},
                    {"sign", t.sign},
                    {"highest_weight", weight_json(t.highest_weight)},
                    {"dim", t.dim}});
    total += t.dim;
    signed_total += t.sign * t.dim;
  }
  json doc = {{"schema", ktypes_schema},
              {"space", sp.name()},
              {"rho_g", weight_json(sp.rho_g())},
              {"rho_k", weight_json(sp.rho_k())},
              {"w_prime_size", ktypes.size()},
              {"ktypes", list},
              {"total_dim", total},
              {"signed_dim_sum", signed_total}};
  return doc.dump(2);
}

std::string catalog_to_json(const std::vector<CatalogEntry> &catalog)
{
  json entries = json::array();
  for (auto const &e : catalog)
    entries.push_back({{"name", e.name},
                       {"family", to_string(e.family)},
                       {"parameters", e.parameters},
                       {"rank_g", factor_rank(e.space)},
                       {"line", e.line},
                       {"note", e.note}});
  json doc = {{"schema", catalog_schema}, {"entries", entries}};
  return doc.dump(2);
}

void write_analysis_text(std::ostream &out, const AnalysisReport &r)
{
  std::vector<std::vector<std::string>> rows = {
    {"space", r.space},
    {"dim_M", std::to_string(r.dim_M)},
    {"verdict", std::string(to_string(r.verdict))},
    {"reason", std::string(to_string(r.reason))}};
  if (r.genus) {
    rows.push_back({"|A-hat|", r.genus->abs_value().str()});
    rows.push_back({"A-hat up to sign", r.genus->value_up_to_sign.str()});
    rows.push_back({"rho_k regular", yes_no(r.genus->rho_k_regular)});
  }
  if (r.kernel) {
    rows.push_back({"HC parameter", r.kernel->harish_chandra_param.str()});
    rows.push_back({"Blattner", r.kernel->blattner.str()});
    rows.push_back({"witness w", word_text(r.kernel->witness_word)});
    rows.push_back({"multiplicity one", yes_no(r.kernel->multiplicity_one)});
  }
  if (r.classification)
    rows.push_back({"classification", std::string(to_string(*r.classification))});
  rows.push_back({"hermitian", yes_no(r.corollary_flags.hermitian)});
  rows.push_back({"dual spin", r.corollary_flags.dual_spin ? yes_no(*r.corollary_flags.dual_spin)
                                                           : "unknown"});
  rows.push_back({"dim_M mod 4", std::to_string(r.corollary_flags.dim_mod_4)});
  write_table(out, rows);
}

void write_sweep_text(std::ostream &out, const SweepSummary &s)
{
  std::vector<std::vector<std::string>> rows = {{"name", "family", "rk_g", "rk_k", "dim", "rho_k",
                                                 "regular", "|A-hat|", "verdict", "reason",
                                                 "class"}};
  for (auto const &r : s.rows)
    rows.push_back({r.name, r.family, std::to_string(r.rank_g), std::to_string(r.rank_k),
                    std::to_string(r.dim_M), r.rho_k ? r.rho_k->str() : "-",
                    r.rho_k_regular ? yes_no(*r.rho_k_regular) : "-",
                    r.abs_a_hat ? r.abs_a_hat->str() : "-", std::string(to_string(r.verdict)),
                    std::string(to_string(r.reason)),
                    r.classification ? std::string(to_string(*r.classification)) : "-"});
  out << "max rank " << s.max_rank << ", " << s.rows.size() << " row(s)\n";
  if (!s.rows.empty())
    write_table(out, rows);
  if (s.truncated)
    out << "TRUNCATED: " << s.truncation_note << '\n';
}

void write_genus_text(std::ostream &out, const std::string &space, const GenusReport &g)
{
  write_table(out, {{"space", space},
                    {"|A-hat|", g.abs_value().str()},
                    {"A-hat up to sign", g.value_up_to_sign.str()},
                    {"nonzero", yes_no(g.nonzero)},
                    {"rho_k regular", yes_no(g.rho_k_regular)}});
}

void write_ktypes_text(std::ostream &out, const SymmetricPair &sp, std::span<const SpinorKType> ktypes)
{
  out << "space " << sp.name() << "\nrho_g " << sp.rho_g().str() << "\nrho_k " << sp.rho_k().str()
      << "\n|W'| " << ktypes.size() << '\n';
  std::vector<std::vector<std::string>> rows = {{"w", "length", "sign", "highest weight", "dim"}};
  std::int64_t total = 0, signed_total = 0;
  for (auto const &t : ktypes) {
    rows.push_back({word_text(t.w.word()), std::to_string(t.w.length()), t.sign > 0 ? "+" : "-",
                    t.highest_weight.str(), std::to_string(t.dim)});
    total += t.dim;
    signed_total += t.sign * t.dim;
  }
  write_table(out, rows);
  out << "total dim " << total << ", signed sum " << signed_total << '\n';
}

void write_catalog_text(std::ostream &out, const std::vector<CatalogEntry> &catalog)
{
  std::vector<std::vector<std::string>> rows = {{"name", "family", "rank", "note"}};
  for (auto const &e : catalog)
    rows.push_back({e.name, std::string(to_string(e.family)), std::to_string(factor_rank(e.space)),
                    e.note});
  write_table(out, rows);
}

} // namespace diracspec
