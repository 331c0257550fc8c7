#include "diracspec/sympair.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "diracspec/errors.hpp"

namespace diracspec {

namespace {

// Positive roots that are not a sum of two positive roots of the same set.
std::vector<WeightVector> indecomposable(const std::vector<WeightVector> &positive)
{
  std::unordered_set<WeightVector, WeightHash> set(positive.begin(), positive.end());
  std::unordered_set<WeightVector, WeightHash> sums;
  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = i + 1; j < positive.size(); ++j) {
      WeightVector s = positive[i] + positive[j];
      if (set.count(s))
        sums.insert(std::move(s));
    }
  std::vector<WeightVector> simple;
  for (auto const &a : positive)
    if (!sums.count(a))
      simple.push_back(a);
  return simple;
}

WeightVector pad(const WeightVector &v, std::size_t before, std::size_t after)
{
  return WeightVector::concat(WeightVector::concat(WeightVector::zero(before), v),
                              WeightVector::zero(after));
}

} // namespace

SymmetricPair SymmetricPair::make(RootSystem g, std::vector<WeightVector> k_positive, PairMeta meta)
{
  SymmetricPair sp;
  const std::string who = meta.name.empty() ? std::string("pair") : meta.name;
  auto fail = [&](const std::string &invariant) {
    throw ValidationError(who + ": " + invariant);
  };

  std::unordered_set<WeightVector, WeightHash> kset;
  for (auto const &a : k_positive) {
    if (!g.is_positive_root(a))
      fail("k_positive must be a subset of the positive roots of g; " + a.str() + " is not");
    if (!kset.insert(a).second)
      fail("k_positive contains " + a.str() + " twice");
  }

  std::vector<WeightVector> k_simple = indecomposable(k_positive);
  try {
    sp.k_ = RootSystem::from_simple_roots(g.ambient_rank(), k_simple);
  } catch (const ConstructionError &e) {
    fail(std::string("compact roots do not form a root system: ") + e.what());
  }
  if (sp.k_.positive().size() != k_positive.size())
    fail("compact roots are not closed under their own reflections");
  for (auto const &a : sp.k_.positive())
    if (!kset.count(a))
      fail("compact roots are not closed under their own reflections; " + a.str() + " missing");

  // Z/2-grading: [k,k] in k, [k,p] in p, [p,p] in k.
  for (auto const &a : g.roots())
    for (auto const &b : g.roots()) {
      WeightVector s = a + b;
      if (!g.contains(s))
        continue;
      bool ka = sp.k_.contains(a), kb = sp.k_.contains(b), ks = sp.k_.contains(s);
      if (ks != (ka == kb))
        fail("compact/noncompact split is not a Z/2-grading at " + a.str() + " + " + b.str());
    }

  for (auto const &a : g.positive())
    if (!kset.count(a))
      sp.p_positive_.push_back(a);

  sp.rho_k_ = WeightVector::zero(g.ambient_rank());
  for (auto const &a : k_positive)
    sp.rho_k_ += a;
  sp.rho_k_ *= Rational(1, 2);
  sp.rho_p_ = g.rho() - sp.rho_k_;

  int dim = 2 * static_cast<int>(sp.p_positive_.size());
  if (meta.dim_M == 0)
    meta.dim_M = dim;
  else if (meta.dim_M != dim)
    fail("dim_M = 2|p_positive| violated: declared " + std::to_string(meta.dim_M) + ", computed " +
         std::to_string(dim));

  LatticeSpec unshifted(g.fundamental_weights());
  bool shift = !unshifted.contains_unshifted(sp.rho_p_);
  sp.lattice_ = LatticeSpec(g.fundamental_weights(), shift, shift ? sp.rho_p_ : WeightVector{});

  sp.g_ = std::move(g);
  sp.k_positive_ = std::move(k_positive);
  sp.meta_ = std::move(meta);
  return sp;
}

SymmetricPair SymmetricPair::from_compact_roots(
  RootSystem g, const std::function<bool(const WeightVector &)> &is_compact, PairMeta meta)
{
  std::vector<WeightVector> kpos;
  for (auto const &a : g.positive())
    if (is_compact(a))
      kpos.push_back(a);
  return make(std::move(g), std::move(kpos), std::move(meta));
}

SymmetricPair SymmetricPair::product(std::span<const SymmetricPair> factors)
{
  if (factors.empty())
    throw DescriptorError("product of zero symmetric pairs");
  if (factors.size() == 1)
    return factors.front();
  std::size_t total = 0;
  for (auto const &f : factors)
    total += f.g().ambient_rank();
  std::vector<WeightVector> simple, kpos;
  PairMeta meta;
  meta.family = "product";
  meta.hermitian = true;
  meta.dual_is_spin = true;
  std::size_t offset = 0;
  for (auto const &f : factors) {
    std::size_t n = f.g().ambient_rank();
    for (auto const &a : f.g().simple())
      simple.push_back(pad(a, offset, total - offset - n));
    for (auto const &a : f.k_positive())
      kpos.push_back(pad(a, offset, total - offset - n));
    meta.name += (meta.name.empty() ? "" : " x ") + f.name();
    meta.hermitian = meta.hermitian && f.meta().hermitian;
    meta.dual_is_spin = meta.dual_is_spin && f.meta().dual_is_spin;
    offset += n;
  }
  return make(RootSystem::from_simple_roots(total, std::move(simple)), std::move(kpos),
              std::move(meta));
}

bool SymmetricPair::computed_hermitian() const
{
  return k_.rank() < g_.rank();
}

bool SymmetricPair::computed_dual_is_spin() const
{
  return lattice_.contains_unshifted(rho_p_);
}

namespace {

WeightVector dominate_k(WeightVector v, const RootSystem &k)
{
  for (;;) {
    bool moved = false;
    for (auto const &a : k.simple())
      if (inner(v, a).sign() < 0) {
        v = reflect(v, a);
        moved = true;
        break;
      }
    if (!moved)
      return v;
  }
}

} // namespace

std::vector<WeylElement> enumerate_w_prime(const SymmetricPair &sp, std::size_t guard)
{
  // Walk the Delta_k^+-dominant points of the W_g-orbit of rho_g: every
  // point reflected by any root of g and moved back into the k-chamber by
  // W_k. Each W_k-coset meets the k-chamber exactly once.
  const RootSystem &g = sp.g();
  std::unordered_set<WeightVector, WeightHash> seen{g.rho()};
  std::vector<WeightVector> points{g.rho()};
  for (std::size_t i = 0; i < points.size(); ++i)
    for (auto const &beta : g.positive()) {
      WeightVector next = dominate_k(reflect(points[i], beta), sp.k());
      if (seen.insert(next).second) {
        if (seen.size() > guard)
          throw ResourceError("W' enumeration exceeded guard of " + std::to_string(guard));
        points.push_back(std::move(next));
      }
    }
  std::vector<WeylElement> result;
  result.reserve(points.size());
  for (auto const &mu : points)
    result.push_back(g.dominate(mu).w);
  std::sort(result.begin(), result.end(), [](const WeylElement &a, const WeylElement &b) {
    if (a.length() != b.length())
      return a.length() < b.length();
    return a.word() < b.word();
  });
  return result;
}

std::vector<SpinorKType> spinor_decomposition(const SymmetricPair &sp)
{
  std::vector<SpinorKType> out;
  for (auto &w : enumerate_w_prime(sp)) {
    SpinorKType t;
    t.highest_weight = w.apply(sp.rho_g()) - sp.rho_k();
    t.dim = weyl_dim(t.highest_weight, sp.k_positive(), sp.rho_k());
    t.sign = sign_of(w);
    t.w = std::move(w);
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<DiscreteSeriesParam> harish_chandra_param(const SymmetricPair &sp,
                                                        const WeightVector &lambda)
{
  if (lambda.size() != sp.g().ambient_rank())
    throw DimensionError("harish_chandra_param: length mismatch");
  if (!is_regular(lambda, sp.g().roots()))
    return std::nullopt;
  for (auto const &a : sp.k_positive())
    if (inner(lambda, a).sign() <= 0)
      return std::nullopt;
  auto d = sp.g().dominate(lambda);
  WeightVector w_rho = d.w.apply(sp.rho_g());
  if (!in_lattice(lambda - w_rho, sp.lattice()))
    return std::nullopt;
  WeightVector kappa = lambda + w_rho - 2 * sp.rho_k();
  return DiscreteSeriesParam{lambda, std::move(d.w), std::move(kappa)};
}

WeightVector blattner(const SymmetricPair &sp, const DiscreteSeriesParam &param)
{
  auto valid = harish_chandra_param(sp, param.lambda);
  if (!valid)
    throw DomainError("blattner: " + param.lambda.str() + " is not a Harish-Chandra parameter");
  if (!(valid->w == param.w))
    throw DomainError("blattner: w does not contain " + param.lambda.str() + " in its chamber");
  return param.lambda + param.w.apply(sp.rho_g()) - 2 * sp.rho_k();
}

std::vector<WeightVector> cone_generators(const SymmetricPair &sp, const WeylElement &w)
{
  WeightVector w_rho = w.apply(sp.rho_g());
  std::vector<WeightVector> gens;
  for (auto const &a : sp.g().roots())
    if (inner(w_rho, a).sign() > 0)
      gens.push_back(a);
  return gens;
}

namespace {

class ConeSearch
{
public:
  ConeSearch(std::vector<WeightVector> gens, const WeightVector &direction)
  : gens_(std::move(gens))
  {
    for (auto const &a : gens_)
      pairing_.push_back(inner(a, direction));
  }

  bool member(const WeightVector &residual, const Rational &height)
  {
    return search(0, residual, height);
  }

private:
  // All generators pair positively with the direction, so the height of the
  // residual bounds every remaining coefficient.
  bool search(std::size_t i, const WeightVector &residual, const Rational &height)
  {
    if (height.sign() < 0)
      return false;
    if (height.is_zero())
      return residual.is_zero();
    if (i == gens_.size())
      return false;
    if (failed_.count({i, residual}))
      return false;
    mpz_class bound = (height / pairing_[i]).floor();
    for (mpz_class n = bound; n >= 0; --n) {
      Rational c{mpq_class(n)};
      if (search(i + 1, residual - c * gens_[i], height - c * pairing_[i]))
        return true;
    }
    failed_.insert({i, residual});
    return false;
  }

  std::vector<WeightVector> gens_;
  std::vector<Rational> pairing_;
  std::set<std::pair<std::size_t, WeightVector>> failed_;
};

} // namespace

bool ktype_cone_member(const SymmetricPair &sp, const WeightVector &kappa_prime,
                       const DiscreteSeriesParam &param)
{
  WeightVector kappa = blattner(sp, param);
  WeightVector w_rho = param.w.apply(sp.rho_g());
  WeightVector residual = kappa_prime - kappa;
  ConeSearch search(cone_generators(sp, param.w), w_rho);
  return search.member(residual, inner(residual, w_rho));
}

ProofInequalities proof_inequalities(const SymmetricPair &sp, const WeightVector &lambda,
                                     const WeylElement &w0, const WeylElement &w,
                                     std::span<const std::int64_t> cone_coefficients)
{
  if (!is_regular(lambda, sp.g().roots()))
    throw DomainError("proof_inequalities: lambda " + lambda.str() + " is g-singular");
  for (auto const &a : sp.k_positive())
    if (inner(lambda, a).sign() <= 0)
      throw DomainError("proof_inequalities: lambda " + lambda.str() + " is not k-dominant");
  if (!(sp.g().dominate(lambda).w == w))
    throw DomainError("proof_inequalities: w is not the chamber element of lambda");

  ProofInequalities r;
  r.translate_pairing.lhs = inner(lambda, w0.apply(sp.rho_g()));
  r.translate_pairing.rhs = inner(lambda, w.apply(sp.rho_g()));
  r.translate_pairing.holds = r.translate_pairing.lhs <= r.translate_pairing.rhs;
  r.translate_pairing.equality = r.translate_pairing.lhs == r.translate_pairing.rhs;

  auto gens = cone_generators(sp, w);
  if (!cone_coefficients.empty() && cone_coefficients.size() != gens.size())
    throw DomainError("proof_inequalities: expected " + std::to_string(gens.size()) +
                      " cone coefficients");
  WeightVector combination = WeightVector::zero(lambda.size());
  for (std::size_t i = 0; i < cone_coefficients.size(); ++i) {
    if (cone_coefficients[i] < 0)
      throw DomainError("proof_inequalities: negative cone coefficient");
    combination += Rational(cone_coefficients[i]) * gens[i];
  }
  r.generators_positive = std::all_of(gens.begin(), gens.end(), [&](const WeightVector &a) {
    return inner(lambda, a).sign() > 0;
  });
  r.cone_pairing.lhs = 0;
  r.cone_pairing.rhs = inner(lambda, combination);
  r.cone_pairing.holds = r.cone_pairing.rhs.sign() >= 0;
  r.cone_pairing.equality = r.cone_pairing.rhs.is_zero();

  Rational pairing = inner(sp.rho_k(), lambda);
  Rational lambda2 = norm2(lambda);
  Rational rho2 = norm2(sp.rho_k());
  Rational middle2 = lambda2 * rho2;
  bool cauchy_schwarz = pairing.sign() <= 0 || pairing * pairing <= middle2;
  bool cauchy_equal = pairing.sign() >= 0 && pairing * pairing == middle2;
  r.norm_bound.lhs = pairing;
  r.norm_bound.rhs = lambda2;
  r.norm_bound.holds = cauchy_schwarz && rho2 <= lambda2;
  r.norm_bound.equality = cauchy_equal && rho2 == lambda2;
  return r;
}

std::size_t weyl_group_order(const RootSystem &rs, std::size_t guard)
{
  return weyl_orbit(rs.rho(), rs, guard).size();
}

} // namespace diracspec
