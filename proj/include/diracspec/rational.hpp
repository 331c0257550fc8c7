#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace diracspec {

// Exact rational number, always in lowest terms with positive denominator.
class Rational
{
public:
  Rational() = default;
  Rational(long long value); // NOLINT(google-explicit-constructor)
  Rational(long long numerator, long long denominator);
  explicit Rational(mpq_class value);

  // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const mpz_class &numerator() const { return value_.get_num(); }
  const mpz_class &denominator() const { return value_.get_den(); }
  const mpq_class &get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  mpz_class floor() const;

  // Throws DomainError when not an integer or out of range.
  std::int64_t to_int64() const;

  // "p" for integers, "p/q" otherwise.
  std::string str() const;
  // Always "p/q", the serialized form.
  std::string fraction_str() const;

  std::size_t hash() const noexcept;

  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
  {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace diracspec
