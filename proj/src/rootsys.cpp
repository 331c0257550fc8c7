#include "diracspec/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "diracspec/errors.hpp"

namespace diracspec {

WeylElement WeylElement::identity(std::size_t ambient_rank)
{
  linalg::Matrix m(ambient_rank, std::vector<Rational>(ambient_rank));
  for (std::size_t i = 0; i < ambient_rank; ++i)
    m[i][i] = 1;
  return WeylElement({}, std::move(m));
}

WeightVector WeylElement::apply(const WeightVector &v) const
{
  if (v.size() != action_.size())
    throw DimensionError("WeylElement::apply: length mismatch");
  std::size_t n = v.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!v[j].is_zero())
        acc += action_[i][j].get() * v[j].get();
    out[i] = Rational(std::move(acc));
  }
  return WeightVector(std::move(out));
}

int sign_of(const WeylElement &w)
{
  return w.length() % 2 == 0 ? 1 : -1;
}

RootSystem RootSystem::from_simple_roots(std::size_t ambient_rank, std::vector<WeightVector> simple,
                                         std::size_t root_guard)
{
  RootSystem rs;
  rs.ambient_rank_ = ambient_rank;
  for (auto const &a : simple) {
    if (a.size() != ambient_rank)
      throw DimensionError("simple root of wrong length");
    if (a.is_zero())
      throw ConstructionError("zero simple root");
  }
  if (linalg::rank(simple) != simple.size())
    throw ConstructionError("simple roots are linearly dependent");
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) {
      if (i == j)
        continue;
      Rational c = coroot_pairing(simple[i], simple[j]);
      if (!c.is_integer() || c.sign() > 0)
        throw ConstructionError("simple roots " + std::to_string(i) + ", " + std::to_string(j) +
                                " have Cartan integer " + c.str());
    }

  std::size_t r = simple.size();
  // Dual basis in the span of simple roots: <coweight_i, alpha_j> = delta_ij.
  linalg::Matrix gram(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      gram[i][j] = inner(simple[i], simple[j]);
  std::vector<WeightVector> dual;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> e(r);
    e[i] = 1;
    auto c = linalg::solve(gram, e);
    if (!c)
      throw ConstructionError("degenerate Gram matrix");
    WeightVector h = WeightVector::zero(ambient_rank);
    for (std::size_t j = 0; j < r; ++j)
      h += (*c)[j] * simple[j];
    dual.push_back(std::move(h));
  }
  for (std::size_t i = 0; i < r; ++i)
    rs.fundamental_.push_back((norm2(simple[i]) / 2) * dual[i]);

  std::unordered_set<WeightVector, WeightHash> seen(simple.begin(), simple.end());
  std::deque<WeightVector> queue(simple.begin(), simple.end());
  std::vector<WeightVector> all(simple.begin(), simple.end());
  while (!queue.empty()) {
    WeightVector beta = std::move(queue.front());
    queue.pop_front();
    for (auto const &alpha : simple) {
      WeightVector image = reflect(beta, alpha);
      if (seen.insert(image).second) {
        if (seen.size() > root_guard)
          throw ConstructionError("root generation exceeded " + std::to_string(root_guard) +
                                  " roots; not of finite type");
        all.push_back(image);
        queue.push_back(std::move(image));
      }
    }
  }

  struct Positive
  {
    WeightVector root;
    std::vector<std::int64_t> coeffs;
    std::int64_t height;
  };
  std::vector<Positive> pos;
  for (auto const &beta : all) {
    std::vector<std::int64_t> coeffs(r);
    int sign = 0;
    for (std::size_t i = 0; i < r; ++i) {
      Rational c = inner(dual[i], beta);
      if (!c.is_integer())
        throw ConstructionError("root " + beta.str() + " is not an integral combination of simple roots");
      coeffs[i] = c.to_int64();
      int s = c.sign();
      if (s != 0) {
        if (sign != 0 && s != sign)
          throw ConstructionError("root " + beta.str() + " has coefficients of mixed sign");
        sign = s;
      }
    }
    if (sign > 0) {
      std::int64_t h = std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0});
      pos.push_back({beta, std::move(coeffs), h});
    }
  }
  if (pos.size() * 2 != all.size())
    throw ConstructionError("roots are not symmetric under negation");
  std::sort(pos.begin(), pos.end(), [](const Positive &a, const Positive &b) {
    if (a.height != b.height)
      return a.height < b.height;
    return a.coeffs > b.coeffs;
  });

  rs.simple_ = std::move(simple);
  rs.rho_ = WeightVector::zero(ambient_rank);
  for (auto &p : pos) {
    rs.rho_ += p.root;
    rs.positive_.push_back(p.root);
    rs.positive_coefficients_.push_back(std::move(p.coeffs));
  }
  rs.rho_ *= Rational(1, 2);
  rs.roots_ = rs.positive_;
  for (auto const &p : rs.positive_)
    rs.roots_.push_back(-p);
  for (std::size_t i = 0; i < rs.roots_.size(); ++i)
    rs.root_index_.emplace(rs.roots_[i], i);
  return rs;
}

bool RootSystem::is_positive_root(const WeightVector &v) const
{
  auto it = root_index_.find(v);
  return it != root_index_.end() && it->second < positive_.size();
}

WeylElement RootSystem::element(std::vector<int> word) const
{
  // Column j of the action is s_{w_1} ... s_{w_k} e_j.
  linalg::Matrix m(ambient_rank_, std::vector<Rational>(ambient_rank_));
  for (std::size_t j = 0; j < ambient_rank_; ++j) {
    WeightVector v = WeightVector::unit(ambient_rank_, j);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it < 0 || static_cast<std::size_t>(*it) >= simple_.size())
        throw DomainError("simple reflection index out of range");
      v = reflect(v, simple_[*it]);
    }
    for (std::size_t i = 0; i < ambient_rank_; ++i)
      m[i][j] = v[i];
  }
  return WeylElement(std::move(word), std::move(m));
}

RootSystem::Dominated RootSystem::dominate(const WeightVector &lambda) const
{
  WeightVector mu = lambda;
  std::vector<int> word;
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      if (inner(mu, simple_[i]).sign() < 0) {
        mu = reflect(mu, simple_[i]);
        word.push_back(static_cast<int>(i));
        moved = true;
        break;
      }
    }
    if (!moved)
      break;
  }
  return {std::move(mu), element(std::move(word))};
}

namespace {

WeightVector ambient(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> entries)
{
  WeightVector v = WeightVector::zero(n);
  for (auto [i, c] : entries)
    v[i] = c;
  return v;
}

} // namespace

RootSystem build_classical(ClassicalType type, int rank)
{
  int min_rank = type == ClassicalType::D ? 2 : 1;
  if (rank < min_rank)
    throw ConstructionError("unsupported rank " + std::to_string(rank));
  auto n = static_cast<std::size_t>(rank);
  std::size_t amb = type == ClassicalType::A ? n + 1 : n;
  std::vector<WeightVector> simple;
  std::size_t chain = type == ClassicalType::A ? n : n - 1;
  for (std::size_t i = 0; i < chain; ++i)
    simple.push_back(ambient(amb, {{i, 1}, {i + 1, -1}}));
  switch (type) {
  case ClassicalType::A:
    break;
  case ClassicalType::B:
    simple.push_back(ambient(amb, {{n - 1, 1}}));
    break;
  case ClassicalType::C:
    simple.push_back(ambient(amb, {{n - 1, 2}}));
    break;
  case ClassicalType::D:
    simple.push_back(ambient(amb, {{n - 2, 1}, {n - 1, 1}}));
    break;
  }
  return RootSystem::from_simple_roots(amb, std::move(simple));
}

CartanMatrix cartan_matrix(ClassicalType type, int rank)
{
  RootSystem rs = build_classical(type, rank);
  auto const &s = rs.simple();
  CartanMatrix c(s.size(), std::vector<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      c[i][j] = static_cast<int>(coroot_pairing(s[i], s[j]).to_int64());
  return c;
}

namespace {

// Writes the positive rational q as a sum of as few rational squares as
// possible (at most four). Returns the square roots.
std::vector<Rational> as_sum_of_squares(const Rational &q)
{
  mpz_class target = q.numerator() * q.denominator();
  if (!target.fits_slong_p())
    throw ConstructionError("Gram pivot too large to embed");
  long t = target.get_si();
  Rational den(mpq_class(q.denominator()));
  auto isqrt = [](long v) {
    long s = 0;
    while ((s + 1) * (s + 1) <= v)
      ++s;
    return s;
  };
  auto result = [&](std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs)
      if (x != 0)
        out.push_back(Rational(x) / den);
    return out;
  };
  long s = isqrt(t);
  if (s * s == t)
    return result({s});
  for (long a = 1; a * a <= t; ++a) {
    long b = isqrt(t - a * a);
    if (a * a + b * b == t)
      return result({a, b});
  }
  for (long a = 1; a * a <= t; ++a)
    for (long b = 1; a * a + b * b <= t; ++b) {
      long c = isqrt(t - a * a - b * b);
      if (c > 0 && a * a + b * b + c * c == t)
        return result({a, b, c});
    }
  for (long a = 1; a * a <= t; ++a)
    for (long b = 1; a * a + b * b <= t; ++b)
      for (long c = 1; a * a + b * b + c * c <= t; ++c) {
        long d = isqrt(t - a * a - b * b - c * c);
        if (d > 0 && a * a + b * b + c * c + d * d == t)
          return result({a, b, c, d});
      }
  throw InternalError("four-square decomposition failed");
}

} // namespace

RootSystem build_from_cartan(const CartanMatrix &cartan)
{
  std::size_t r = cartan.size();
  if (r == 0)
    throw ConstructionError("empty Cartan matrix");
  for (std::size_t i = 0; i < r; ++i) {
    if (cartan[i].size() != r)
      throw ConstructionError("Cartan matrix is not square");
    if (cartan[i][i] != 2)
      throw ConstructionError("Cartan matrix diagonal entry is not 2");
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)))
        throw ConstructionError("invalid off-diagonal Cartan entries at " + std::to_string(i) +
                                "," + std::to_string(j));

  // Squared lengths n_j with a_ij n_j = a_ji n_i, fixed per connected component.
  std::vector<Rational> len(r);
  std::vector<bool> done(r, false);
  for (std::size_t start = 0; start < r; ++start) {
    if (done[start])
      continue;
    std::vector<std::size_t> component{start};
    done[start] = true;
    len[start] = 1;
    for (std::size_t k = 0; k < component.size(); ++k) {
      std::size_t i = component[k];
      for (std::size_t j = 0; j < r; ++j)
        if (!done[j] && cartan[i][j] != 0) {
          len[j] = Rational(cartan[j][i]) * len[i] / Rational(cartan[i][j]);
          done[j] = true;
          component.push_back(j);
        }
    }
    Rational shortest = len[start];
    for (auto i : component)
      shortest = std::min(shortest, len[i]);
    for (auto i : component)
      len[i] = 2 * len[i] / shortest;
  }
  linalg::Matrix gram(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      gram[i][j] = Rational(cartan[i][j]) * len[j] / 2;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (gram[i][j] != gram[j][i])
        throw ConstructionError("Cartan matrix is not symmetrizable");

  // gram = L D L^T
  linalg::Matrix lower(r, std::vector<Rational>(r));
  std::vector<Rational> pivot(r);
  for (std::size_t j = 0; j < r; ++j) {
    Rational d = gram[j][j];
    for (std::size_t k = 0; k < j; ++k)
      d -= lower[j][k] * lower[j][k] * pivot[k];
    if (d.sign() <= 0)
      throw ConstructionError("Cartan matrix is not of finite type");
    pivot[j] = d;
    lower[j][j] = 1;
    for (std::size_t i = j + 1; i < r; ++i) {
      Rational v = gram[i][j];
      for (std::size_t k = 0; k < j; ++k)
        v -= lower[i][k] * lower[j][k] * pivot[k];
      lower[i][j] = v / d;
    }
  }

  std::vector<std::vector<Rational>> roots_of_pivot;
  std::size_t amb = 0;
  for (auto const &d : pivot) {
    roots_of_pivot.push_back(as_sum_of_squares(d));
    amb += roots_of_pivot.back().size();
  }
  std::vector<WeightVector> simple;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < r; ++i)
      for (auto const &t : roots_of_pivot[i])
        coords.push_back(lower[j][i] * t);
    simple.emplace_back(std::move(coords));
  }
  return RootSystem::from_simple_roots(amb, std::move(simple));
}

bool is_dominant(const WeightVector &lambda, const RootSystem &rs, bool strict)
{
  for (auto const &alpha : rs.simple()) {
    int s = inner(lambda, alpha).sign();
    if (s < 0 || (strict && s == 0))
      return false;
  }
  return true;
}

std::vector<WeightVector> weyl_orbit(const WeightVector &lambda, const RootSystem &rs,
                                     std::size_t guard)
{
  std::unordered_set<WeightVector, WeightHash> seen{lambda};
  std::vector<WeightVector> orbit{lambda};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (auto const &alpha : rs.simple()) {
      if (inner(orbit[k], alpha).is_zero())
        continue;
      WeightVector image = reflect(orbit[k], alpha);
      if (seen.insert(image).second) {
        if (seen.size() > guard)
          throw ResourceError("Weyl orbit exceeded guard of " + std::to_string(guard));
        orbit.push_back(std::move(image));
      }
    }
  }
  return orbit;
}

std::int64_t weyl_dim(const WeightVector &kappa, std::span<const WeightVector> positive_roots,
                      const WeightVector &rho)
{
  Rational dim = 1;
  for (auto const &alpha : positive_roots) {
    if (inner(kappa, alpha).sign() < 0)
      throw DomainError("weyl_dim: " + kappa.str() + " is not dominant");
    if (!coroot_pairing(kappa, alpha).is_integer())
      throw DomainError("weyl_dim: " + kappa.str() + " is not algebraically integral");
    Rational denom = inner(rho, alpha);
    if (denom.sign() <= 0)
      throw DomainError("weyl_dim: rho is not strictly dominant");
    dim *= inner(kappa + rho, alpha) / denom;
  }
  if (!dim.is_integer() || dim.sign() <= 0)
    throw InternalError("weyl_dim: dimension formula produced " + dim.str());
  return dim.to_int64();
}

} // namespace diracspec
