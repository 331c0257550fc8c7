#include "diracspec/rational.hpp"

#include <cctype>
#include <ostream>

#include "diracspec/errors.hpp"

namespace diracspec {

namespace {

mpz_class to_mpz(long long v)
{
  mpz_class z;
  // mpz_class has no long long constructor on every platform
  z = static_cast<long>(v);
  if (static_cast<long long>(static_cast<long>(v)) != v)
    z = mpz_class(std::to_string(v));
  return z;
}

bool parse_integer(std::string_view s, mpz_class &out)
{
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      return false;
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Rational::Rational(long long value)
: value_(to_mpz(value))
{}

Rational::Rational(long long numerator, long long denominator)
{
  if (denominator == 0)
    throw DomainError("rational with zero denominator");
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value)
: value_(std::move(value))
{
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
  text = trim(text);
  mpz_class num, den = 1;
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
              ? parse_integer(text, num)
              : parse_integer(trim(text.substr(0, slash)), num) &&
                  parse_integer(trim(text.substr(slash + 1)), den);
  if (!ok)
    throw DomainError("malformed rational '" + std::string(text) + "'");
  if (den == 0)
    throw DomainError("rational with zero denominator '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

Rational Rational::abs() const
{
  return Rational(mpq_class(::abs(value_)));
}

mpz_class Rational::floor() const
{
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::int64_t Rational::to_int64() const
{
  if (!is_integer())
    throw DomainError("rational " + str() + " is not an integer");
  const mpz_class &n = value_.get_num();
  if (!n.fits_slong_p())
    throw DomainError("integer " + str() + " out of range");
  return n.get_si();
}

std::string Rational::str() const
{
  return value_.get_str();
}

std::string Rational::fraction_str() const
{
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const noexcept
{
  auto limb = [](const mpz_class &z) -> std::size_t {
    if (mpz_size(z.get_mpz_t()) == 0)
      return 0;
    return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) * (sgn(z) < 0 ? 31u : 1u);
  };
  std::size_t h = limb(value_.get_num());
  return h ^ (limb(value_.get_den()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

Rational &Rational::operator+=(const Rational &rhs)
{
  value_ += rhs.value_;
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs)
{
  value_ -= rhs.value_;
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs)
{
  value_ *= rhs.value_;
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs)
{
  if (rhs.is_zero())
    throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const
{
  return Rational(mpq_class(-value_));
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
  return os << r.str();
}

} // namespace diracspec
