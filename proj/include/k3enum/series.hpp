#ifndef K3ENUM_SERIES_HPP
#define K3ENUM_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3enum/rational.hpp"

namespace k3enum {

/// Truncated one-variable Laurent series
///
///   sum_{n >= min_exponent} c_n x^n  +  O(x^truncation)
///
/// with dense coefficient storage. Coefficients are known exactly for every
/// exponent below truncation(); nothing at or beyond it is ever stored or
/// reported. The stored range is normalized so that the first and last stored
/// coefficients are nonzero; the zero series stores nothing and has
/// min_exponent() == min(0, truncation()).
template <typename Scalar>
class Series {
 public:
  using scalar_type = Scalar;

  Series() : Series("q", 0, 0, {}) {}

  Series(std::string variable, int min_exponent, int truncation,
         std::vector<Scalar> coefficients)
      : variable_(std::move(variable)),
        min_exponent_(min_exponent),
        truncation_(truncation),
        coefficients_(std::move(coefficients)) {
    normalize();
  }

  static Series zero(std::string variable, int truncation) {
    return Series(std::move(variable), 0, truncation, {});
  }
  static Series one(std::string variable, int truncation) {
    return monomial(std::move(variable), 0, Scalar(1), truncation);
  }
  static Series monomial(std::string variable, int exponent, Scalar c, int truncation) {
    return Series(std::move(variable), exponent, truncation, {std::move(c)});
  }

  const std::string& variable() const { return variable_; }
  int min_exponent() const { return min_exponent_; }
  int truncation() const { return truncation_; }
  std::span<const Scalar> coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }

  /// Exponent of the first nonzero coefficient; truncation() for the zero
  /// series (it is only known to vanish up to there).
  int valuation() const { return is_zero() ? truncation_ : min_exponent_; }

  /// One past the last stored exponent.
  int stored_end() const { return min_exponent_ + static_cast<int>(coefficients_.size()); }

  /// Coefficient of x^n. Throws std::out_of_range for n >= truncation().
  Scalar operator[](int n) const {
    if (n >= truncation_) {
      throw std::out_of_range("coefficient " + std::to_string(n) + " of " + variable_ +
                              " is beyond truncation order " + std::to_string(truncation_));
    }
    if (n < min_exponent_ || n >= stored_end()) return Scalar(0);
    return coefficients_[static_cast<std::size_t>(n - min_exponent_)];
  }

  Series truncated(int order) const {
    return Series(variable_, min_exponent_, std::min(order, truncation_), coefficients_);
  }

  /// Multiplies by x^k.
  Series shifted(int k) const {
    return Series(variable_, min_exponent_ + k, truncation_ + k, coefficients_);
  }

  Series scaled(const Scalar& c) const {
    std::vector<Scalar> out(coefficients_);
    for (auto& x : out) x *= c;
    return Series(variable_, min_exponent_, truncation_, std::move(out));
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.variable_ == b.variable_ && a.truncation_ == b.truncation_ &&
           a.min_exponent_ == b.min_exponent_ && a.coefficients_ == b.coefficients_;
  }

 private:
  void normalize() {
    const int end = min_exponent_ + static_cast<int>(coefficients_.size());
    if (end > truncation_) {
      const int keep = std::max(0, truncation_ - min_exponent_);
      coefficients_.resize(static_cast<std::size_t>(keep));
    }
    while (!coefficients_.empty() && coefficients_.back() == Scalar(0)) coefficients_.pop_back();
    std::size_t lead = 0;
    while (lead < coefficients_.size() && coefficients_[lead] == Scalar(0)) ++lead;
    if (lead == coefficients_.size()) {
      coefficients_.clear();
      min_exponent_ = std::min(0, truncation_);
      return;
    }
    if (lead > 0) {
      coefficients_.erase(coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(lead));
      min_exponent_ += static_cast<int>(lead);
    }
  }

  std::string variable_;
  int min_exponent_ = 0;
  int truncation_ = 0;
  std::vector<Scalar> coefficients_;
};

using LaurentSeries = Series<Rational>;

namespace detail {

template <typename Scalar>
void require_same_variable(const Series<Scalar>& a, const Series<Scalar>& b) {
  if (a.variable() != b.variable()) {
    throw std::invalid_argument("series variable mismatch: '" + a.variable() + "' vs '" +
                                b.variable() + "'");
  }
}

}  // namespace detail

template <typename Scalar>
Series<Scalar> add(const Series<Scalar>& a, const Series<Scalar>& b) {
  detail::require_same_variable(a, b);
  const int trunc = std::min(a.truncation(), b.truncation());
  if (a.is_zero()) return b.truncated(trunc);
  if (b.is_zero()) return a.truncated(trunc);
  const int lo = std::min(a.min_exponent(), b.min_exponent());
  const int hi = std::min(trunc, std::max(a.stored_end(), b.stored_end()));
  std::vector<Scalar> out(static_cast<std::size_t>(std::max(0, hi - lo)), Scalar(0));
  for (int n = lo; n < hi; ++n) out[static_cast<std::size_t>(n - lo)] = a[n] + b[n];
  return Series<Scalar>(a.variable(), lo, trunc, std::move(out));
}

template <typename Scalar>
Series<Scalar> negate(const Series<Scalar>& a) {
  return a.scaled(Scalar(-1));
}

template <typename Scalar>
Series<Scalar> subtract(const Series<Scalar>& a, const Series<Scalar>& b) {
  return add(a, negate(b));
}

/// Cauchy product. The result is known up to
/// min(trunc(a) + val(b), trunc(b) + val(a)).
template <typename Scalar>
Series<Scalar> multiply(const Series<Scalar>& a, const Series<Scalar>& b) {
  detail::require_same_variable(a, b);
  const int trunc = std::min(a.truncation() + b.valuation(), b.truncation() + a.valuation());
  if (a.is_zero() || b.is_zero()) return Series<Scalar>::zero(a.variable(), trunc);
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = std::min(trunc, a.stored_end() + b.stored_end() - 1);
  if (hi <= lo) return Series<Scalar>::zero(a.variable(), trunc);
  std::vector<Scalar> out(static_cast<std::size_t>(hi - lo), Scalar(0));
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == Scalar(0)) continue;
    const std::size_t limit = std::min(cb.size(), out.size() - std::min(out.size(), i));
    for (std::size_t j = 0; j < limit; ++j) out[i + j] += ca[i] * cb[j];
  }
  return Series<Scalar>(a.variable(), lo, trunc, std::move(out));
}

/// Multiplicative inverse. Throws std::domain_error for the zero series.
/// For a of valuation v known to order T the inverse has valuation -v and is
/// known to order T - 2v.
template <typename Scalar>
Series<Scalar> inverse(const Series<Scalar>& a) {
  if (a.is_zero()) throw std::domain_error("series is not invertible (zero up to truncation)");
  const int v = a.valuation();
  const int length = a.truncation() - v;
  const auto ca = a.coefficients();
  const Scalar lead_inv = Scalar(1) / ca[0];
  std::vector<Scalar> out(static_cast<std::size_t>(length), Scalar(0));
  out[0] = lead_inv;
  for (int n = 1; n < length; ++n) {
    Scalar acc(0);
    const int top = std::min<int>(n, static_cast<int>(ca.size()) - 1);
    for (int i = 1; i <= top; ++i) {
      acc += ca[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(n - i)];
    }
    out[static_cast<std::size_t>(n)] = -(acc * lead_inv);
  }
  return Series<Scalar>(a.variable(), -v, a.truncation() - 2 * v, std::move(out));
}

/// a^k by repeated squaring; negative k goes through inverse(). a^0 is 1 known
/// to the relative precision of a.
template <typename Scalar>
Series<Scalar> pow(const Series<Scalar>& a, long k) {
  if (k < 0) return pow(inverse(a), -k);
  if (k == 0) return Series<Scalar>::one(a.variable(), a.truncation() - a.valuation());
  std::optional<Series<Scalar>> result;
  Series<Scalar> base = a;
  while (true) {
    if (k & 1) result = result ? multiply(*result, base) : base;
    k >>= 1;
    if (k == 0) break;
    base = multiply(base, base);
  }
  return *result;
}

/// The derivation x d/dx: the coefficient of x^n is multiplied by n.
template <typename Scalar>
Series<Scalar> q_derivative(const Series<Scalar>& a) {
  std::vector<Scalar> out(a.coefficients().begin(), a.coefficients().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= Scalar(a.min_exponent() + static_cast<int>(i));
  }
  return Series<Scalar>(a.variable(), a.min_exponent(), a.truncation(), std::move(out));
}

template <typename Scalar>
Series<Scalar> operator+(const Series<Scalar>& a, const Series<Scalar>& b) {
  return add(a, b);
}
template <typename Scalar>
Series<Scalar> operator-(const Series<Scalar>& a, const Series<Scalar>& b) {
  return subtract(a, b);
}
template <typename Scalar>
Series<Scalar> operator-(const Series<Scalar>& a) {
  return negate(a);
}
template <typename Scalar>
Series<Scalar> operator*(const Series<Scalar>& a, const Series<Scalar>& b) {
  return multiply(a, b);
}
template <typename Scalar>
Series<Scalar> operator*(const Scalar& c, const Series<Scalar>& a) {
  return a.scaled(c);
}

}  // namespace k3enum

#endif  // K3ENUM_SERIES_HPP
