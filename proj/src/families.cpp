#include "diracspec/families.hpp"

#include <string>

#include "diracspec/errors.hpp"

namespace diracspec {

namespace {

std::vector<std::size_t> support(const WeightVector &v)
{
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      s.push_back(i);
  return s;
}

// e_i - e_j, the roots of the gl(n) block
bool is_difference_root(const WeightVector &v)
{
  auto s = support(v);
  return s.size() == 2 && (v[s[0]] + v[s[1]]).is_zero();
}

std::string pair_name(const char *family, std::initializer_list<int> params)
{
  std::string n = std::string(family) + ":";
  bool first = true;
  for (int p : params) {
    n += (first ? "" : ",") + std::to_string(p);
    first = false;
  }
  return n;
}

} // namespace

SymmetricPair aiii_pair(int p, int q)
{
  if (p < 1 || q < 1)
    throw ConstructionError("AIII needs p, q >= 1");
  auto block = [p](std::size_t i) { return static_cast<int>(i) < p; };
  PairMeta meta{pair_name("AIII", {p, q}), "AIII", {p, q}, true, (p + q) % 2 == 0, 0,
                "realized in U(p+q); the noncompact form is a quotient of a finite cover of SU(p,q)"};
  return SymmetricPair::from_compact_roots(
    build_classical(ClassicalType::A, p + q - 1),
    [&](const WeightVector &a) {
      auto s = support(a);
      return block(s[0]) == block(s[1]);
    },
    std::move(meta));
}

SymmetricPair ci_pair(int n)
{
  PairMeta meta{pair_name("CI", {n}), "CI", {n}, true, n % 2 == 1, 0, ""};
  return SymmetricPair::from_compact_roots(build_classical(ClassicalType::C, n), is_difference_root,
                                           std::move(meta));
}

SymmetricPair bdi_pair(int p, int q)
{
  if (p < 1 || q < 1 || p + q < 3)
    throw ConstructionError("BDI needs p, q >= 1 and p + q >= 3");
  if (p % 2 == 1 && q % 2 == 1)
    throw ConstructionError("BDI:" + std::to_string(p) + "," + std::to_string(q) +
                            " is not of equal rank");
  int even = p % 2 == 0 ? p : q;
  int m = p + q;
  auto a = static_cast<std::size_t>(even / 2);
  RootSystem g = m % 2 == 1 ? build_classical(ClassicalType::B, (m - 1) / 2)
                            : build_classical(ClassicalType::D, m / 2);
  PairMeta meta{pair_name("BDI", {p, q}), "BDI", {p, q}, p == 2 || q == 2, m % 2 == 0, 0, ""};
  return SymmetricPair::from_compact_roots(
    std::move(g),
    [a](const WeightVector &r) {
      auto s = support(r);
      if (s.size() == 1)
        return s[0] >= a;
      return (s[0] < a) == (s[1] < a);
    },
    std::move(meta));
}

SymmetricPair diii_pair(int n)
{
  PairMeta meta{pair_name("DIII", {n}), "DIII", {n}, true, true, 0, ""};
  return SymmetricPair::from_compact_roots(build_classical(ClassicalType::D, n), is_difference_root,
                                           std::move(meta));
}

SymmetricPair cii_pair(int p, int q)
{
  if (p < 1 || q < 1)
    throw ConstructionError("CII needs p, q >= 1");
  auto block = [p](std::size_t i) { return static_cast<int>(i) < p; };
  PairMeta meta{pair_name("CII", {p, q}), "CII", {p, q}, false, true, 0, ""};
  return SymmetricPair::from_compact_roots(
    build_classical(ClassicalType::C, p + q),
    [&](const WeightVector &r) {
      auto s = support(r);
      return s.size() == 1 || block(s[0]) == block(s[1]);
    },
    std::move(meta));
}

SymmetricPair marked_cartan_pair(const CartanMatrix &cartan, int marked_node, PairMeta meta)
{
  RootSystem g = build_from_cartan(cartan);
  if (marked_node < 0 || static_cast<std::size_t>(marked_node) >= g.rank())
    throw ConstructionError("marked node " + std::to_string(marked_node + 1) + " out of range");
  std::vector<WeightVector> kpos;
  for (std::size_t i = 0; i < g.positive().size(); ++i)
    if (g.positive_coefficients()[i][static_cast<std::size_t>(marked_node)] % 2 == 0)
      kpos.push_back(g.positive()[i]);
  return SymmetricPair::make(std::move(g), std::move(kpos), std::move(meta));
}

SymmetricPair degenerate_pair(RootSystem g, std::string name)
{
  std::vector<WeightVector> kpos = g.positive();
  PairMeta meta{std::move(name), "degenerate", {}, false, true, 0, "K = G"};
  return SymmetricPair::make(std::move(g), std::move(kpos), std::move(meta));
}

} // namespace diracspec
