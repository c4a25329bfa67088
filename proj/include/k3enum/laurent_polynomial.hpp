#ifndef K3ENUM_LAURENT_POLYNOMIAL_HPP
#define K3ENUM_LAURENT_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "k3enum/rational.hpp"

namespace k3enum {

/// Exact (untruncated) Laurent polynomial in one variable. Normalized so
/// that the first and last stored coefficients are nonzero; zero is the
/// empty list with min_exponent 0.
template <typename Scalar>
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  LaurentPolynomial(int min_exponent, std::vector<Scalar> coefficients)
      : min_exponent_(min_exponent), coefficients_(std::move(coefficients)) {
    normalize();
  }

  static LaurentPolynomial constant(Scalar c) { return LaurentPolynomial(0, {std::move(c)}); }
  static LaurentPolynomial monomial(int exponent, Scalar c) {
    return LaurentPolynomial(exponent, {std::move(c)});
  }

  int min_exponent() const { return min_exponent_; }
  /// Largest exponent with a nonzero coefficient; min_exponent() - 1 for zero.
  int max_exponent() const { return min_exponent_ + static_cast<int>(coefficients_.size()) - 1; }
  std::span<const Scalar> coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }

  Scalar operator[](int n) const {
    if (n < min_exponent_ || n > max_exponent()) return Scalar(0);
    return coefficients_[static_cast<std::size_t>(n - min_exponent_)];
  }

  /// Multiplies by x^k.
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial out = *this;
    if (!out.is_zero()) out.min_exponent_ += k;
    return out;
  }

  LaurentPolynomial scaled(const Scalar& c) const {
    std::vector<Scalar> out(coefficients_);
    for (auto& x : out) x *= c;
    return LaurentPolynomial(min_exponent_, std::move(out));
  }

  /// x -> 1/x.
  LaurentPolynomial inverted_variable() const {
    std::vector<Scalar> out(coefficients_.rbegin(), coefficients_.rend());
    return LaurentPolynomial(-max_exponent(), std::move(out));
  }

  /// x -> -x.
  LaurentPolynomial negated_variable() const {
    std::vector<Scalar> out(coefficients_);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if ((min_exponent_ + static_cast<int>(i)) % 2 != 0) out[i] = -out[i];
    }
    return LaurentPolynomial(min_exponent_, std::move(out));
  }

  bool is_symmetric() const { return *this == inverted_variable(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    const int lo = std::min(min_exponent_, rhs.min_exponent_);
    const int hi = std::max(max_exponent(), rhs.max_exponent());
    std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
      out[static_cast<std::size_t>(min_exponent_ - lo) + i] += coefficients_[i];
    }
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
      out[static_cast<std::size_t>(rhs.min_exponent_ - lo) + i] += rhs.coefficients_[i];
    }
    *this = LaurentPolynomial(lo, std::move(out));
    return *this;
  }

  /// this += c * x^k * rhs, without materializing the shifted copy.
  void add_scaled_shift(const LaurentPolynomial& rhs, const Scalar& c, int k) {
    if (rhs.is_zero() || c == Scalar(0)) return;
    const int rlo = rhs.min_exponent_ + k;
    const int rhi = rhs.max_exponent() + k;
    if (is_zero()) {
      *this = rhs.scaled(c).shifted(k);
      return;
    }
    const int lo = std::min(min_exponent_, rlo);
    const int hi = std::max(max_exponent(), rhi);
    if (lo < min_exponent_ || hi > max_exponent()) {
      std::vector<Scalar> grown(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
      std::copy(coefficients_.begin(), coefficients_.end(),
                grown.begin() + (min_exponent_ - lo));
      coefficients_ = std::move(grown);
      min_exponent_ = lo;
    }
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
      coefficients_[static_cast<std::size_t>(rlo - min_exponent_) + i] += c * rhs.coefficients_[i];
    }
    normalize();
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + b.scaled(Scalar(-1));
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coefficients_.size() + b.coefficients_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
        out[i + j] += a.coefficients_[i] * b.coefficients_[j];
      }
    }
    return LaurentPolynomial(a.min_exponent_ + b.min_exponent_, std::move(out));
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.min_exponent_ == b.min_exponent_ && a.coefficients_ == b.coefficients_;
  }

 private:
  void normalize() {
    while (!coefficients_.empty() && coefficients_.back() == Scalar(0)) coefficients_.pop_back();
    std::size_t lead = 0;
    while (lead < coefficients_.size() && coefficients_[lead] == Scalar(0)) ++lead;
    if (lead == coefficients_.size()) {
      coefficients_.clear();
      min_exponent_ = 0;
      return;
    }
    if (lead > 0) {
      coefficients_.erase(coefficients_.begin(),
                          coefficients_.begin() + static_cast<std::ptrdiff_t>(lead));
      min_exponent_ += static_cast<int>(lead);
    }
  }

  int min_exponent_ = 0;
  std::vector<Scalar> coefficients_;
};

using LaurentPoly = LaurentPolynomial<Rational>;

}  // namespace k3enum

#endif  // K3ENUM_LAURENT_POLYNOMIAL_HPP
