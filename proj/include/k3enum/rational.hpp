#ifndef K3ENUM_RATIONAL_HPP
#define K3ENUM_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace k3enum {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper around mpq_class that hides GMP's
/// expression templates so it can be used as a generic scalar.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(Integer(static_cast<long>(value))) {  // NOLINT
    static_assert(sizeof(T) <= sizeof(long), "integer type wider than long");
  }

  Rational(const Integer& value) : value_(value) {}  // NOLINT

  /// Throws std::domain_error on a zero denominator.
  Rational(const Integer& numerator, const Integer& denominator);

  explicit Rational(const mpq_class& value) : value_(value) {
    value_.canonicalize();
  }

  /// Accepts "a" or "a/b" with decimal integers.
  static Rational parse(std::string_view text);

  const mpq_class& gmp() const { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Requires is_integer().
  Integer to_integer() const;

  std::string to_string() const { return value_.get_str(); }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

Rational abs(const Rational& x);

/// a^k for k >= 0.
Integer ipow(const Integer& base, unsigned long exponent);

}  // namespace k3enum

namespace Eigen {

template <>
struct NumTraits<k3enum::Rational> : GenericNumTraits<k3enum::Rational> {
  using Real = k3enum::Rational;
  using NonInteger = k3enum::Rational;
  using Literal = k3enum::Rational;
  using Nested = k3enum::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // K3ENUM_RATIONAL_HPP
