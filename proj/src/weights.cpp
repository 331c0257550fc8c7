#include "diracspec/weights.hpp"

#include <sstream>
#include <utility>

#include "diracspec/errors.hpp"

namespace diracspec {

namespace {

void require_same_length(const WeightVector &u, const WeightVector &v, const char *op)
{
  if (u.size() != v.size())
    throw DimensionError(std::string(op) + ": length mismatch " + std::to_string(u.size()) +
                         " vs " + std::to_string(v.size()));
}

} // namespace

WeightVector WeightVector::unit(std::size_t n, std::size_t i)
{
  WeightVector v = zero(n);
  v[i] = 1;
  return v;
}

bool WeightVector::is_zero() const
{
  for (auto const &c : coords_)
    if (!c.is_zero())
      return false;
  return true;
}

WeightVector &WeightVector::operator+=(const WeightVector &rhs)
{
  require_same_length(*this, rhs, "add");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] += rhs.coords_[i];
  return *this;
}

WeightVector &WeightVector::operator-=(const WeightVector &rhs)
{
  require_same_length(*this, rhs, "subtract");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] -= rhs.coords_[i];
  return *this;
}

WeightVector &WeightVector::operator*=(const Rational &s)
{
  for (auto &c : coords_)
    c *= s;
  return *this;
}

WeightVector WeightVector::operator-() const
{
  WeightVector r(*this);
  for (auto &c : r.coords_)
    c = -c;
  return r;
}

std::string WeightVector::str() const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i)
    os << (i ? ", " : "") << coords_[i];
  os << ')';
  return os.str();
}

std::size_t WeightVector::hash() const noexcept
{
  std::size_t h = coords_.size();
  for (auto const &c : coords_)
    h ^= c.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

WeightVector WeightVector::concat(const WeightVector &a, const WeightVector &b)
{
  std::vector<Rational> c(a.coords_);
  c.insert(c.end(), b.coords_.begin(), b.coords_.end());
  return WeightVector(std::move(c));
}

Rational inner(const WeightVector &u, const WeightVector &v)
{
  require_same_length(u, v, "inner");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    acc += u[i].get() * v[i].get();
  return Rational(std::move(acc));
}

Rational coroot_pairing(const WeightVector &v, const WeightVector &alpha)
{
  Rational aa = norm2(alpha);
  if (aa.is_zero())
    throw InvalidRootError("zero root");
  return 2 * inner(v, alpha) / aa;
}

WeightVector reflect(const WeightVector &v, const WeightVector &alpha)
{
  Rational c = coroot_pairing(v, alpha);
  if (c.is_zero())
    return v;
  return v - c * alpha;
}

bool is_regular(const WeightVector &lambda, std::span<const WeightVector> roots)
{
  for (auto const &gamma : roots)
    if (inner(lambda, gamma).is_zero())
      return false;
  return true;
}

bool is_algebraically_integral(const WeightVector &kappa,
                               std::span<const WeightVector> positive_roots)
{
  for (auto const &alpha : positive_roots)
    if (!coroot_pairing(kappa, alpha).is_integer())
      return false;
  return true;
}

LatticeSpec::LatticeSpec(std::vector<WeightVector> generators, bool allow_half_shift,
                         WeightVector half_shift)
: generators_(std::move(generators)),
  allow_half_shift_(allow_half_shift),
  half_shift_(std::move(half_shift))
{
  for (auto const &g : generators_)
    if (g.size() != generators_.front().size())
      throw DimensionError("lattice generators of different length");
  if (linalg::rank(generators_) != generators_.size())
    throw DomainError("lattice generators are linearly dependent");
  if (allow_half_shift_ && !generators_.empty() && half_shift_.size() != generators_.front().size())
    throw DimensionError("lattice half shift has wrong length");
}

LatticeSpec LatticeSpec::standard(std::size_t n)
{
  std::vector<WeightVector> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(WeightVector::unit(n, i));
  return LatticeSpec(std::move(gens));
}

bool LatticeSpec::contains_unshifted(const WeightVector &v) const
{
  if (generators_.empty())
    return v.is_zero();
  auto coeffs = linalg::solve_in_span(generators_, v);
  if (!coeffs)
    return false;
  for (auto const &c : *coeffs)
    if (!c.is_integer())
      return false;
  return true;
}

LatticeSpec LatticeSpec::direct_sum(const LatticeSpec &a, const LatticeSpec &b)
{
  std::size_t na = a.generators_.empty() ? a.half_shift_.size() : a.generators_.front().size();
  std::size_t nb = b.generators_.empty() ? b.half_shift_.size() : b.generators_.front().size();
  std::vector<WeightVector> gens;
  for (auto const &g : a.generators_)
    gens.push_back(WeightVector::concat(g, WeightVector::zero(nb)));
  for (auto const &g : b.generators_)
    gens.push_back(WeightVector::concat(WeightVector::zero(na), g));
  bool shifted = a.allow_half_shift_ || b.allow_half_shift_;
  WeightVector shift;
  if (shifted) {
    WeightVector sa = a.allow_half_shift_ ? a.half_shift_ : WeightVector::zero(na);
    WeightVector sb = b.allow_half_shift_ ? b.half_shift_ : WeightVector::zero(nb);
    shift = WeightVector::concat(sa, sb);
  }
  return LatticeSpec(std::move(gens), shifted, std::move(shift));
}

bool in_lattice(const WeightVector &v, const LatticeSpec &lattice)
{
  if (lattice.contains_unshifted(v))
    return true;
  return lattice.allow_half_shift() && lattice.contains_unshifted(v - lattice.half_shift());
}

namespace linalg {

namespace {

// Reduces rows in place to row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(Matrix &rows, std::size_t ncols)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero())
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero())
        continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < ncols; ++j)
        rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t rank(std::span<const WeightVector> vectors)
{
  if (vectors.empty())
    return 0;
  Matrix rows;
  for (auto const &v : vectors)
    rows.push_back(v.coords());
  return echelon(rows, vectors.front().size()).size();
}

std::optional<std::vector<Rational>> solve_in_span(std::span<const WeightVector> basis,
                                                   const WeightVector &v)
{
  std::size_t k = basis.size();
  std::size_t n = v.size();
  if (k == 0)
    return v.is_zero() ? std::optional<std::vector<Rational>>(std::vector<Rational>{})
                       : std::nullopt;
  // Augmented system: columns are basis vectors, last column is v.
  Matrix rows(n, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n)
      throw DimensionError("solve_in_span: length mismatch");
    for (std::size_t i = 0; i < n; ++i)
      rows[i][j] = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i)
    rows[i][k] = v[i];
  auto pivots = echelon(rows, k + 1);
  if (!pivots.empty() && pivots.back() == k)
    return std::nullopt;
  if (pivots.size() != k)
    throw DomainError("solve_in_span: basis is linearly dependent");
  std::vector<Rational> coeffs(k);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    coeffs[pivots[r]] = rows[r][k] / rows[r][pivots[r]];
  return coeffs;
}

Rational determinant(Matrix m)
{
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero())
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero())
        continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j)
        m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> b)
{
  std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    m[i].push_back(b[i]);
  auto pivots = echelon(m, n + 1);
  if (pivots.size() != n || pivots.back() == n)
    return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r)
    x[pivots[r]] = m[r][n] / m[r][pivots[r]];
  return x;
}

} // namespace linalg

} // namespace diracspec
