#ifndef K3ENUM_BISERIES_HPP
#define K3ENUM_BISERIES_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "k3enum/laurent_polynomial.hpp"
#include "k3enum/rational.hpp"
#include "k3enum/series.hpp"

namespace k3enum {

/// Power series in an outer variable (q), truncated at truncation(), whose
/// q^h coefficients are exact Laurent polynomials in an inner variable.
template <typename Scalar>
class BiSeries {
 public:
  BiSeries() = default;

  BiSeries(std::string inner_variable, std::vector<LaurentPolynomial<Scalar>> slices)
      : inner_variable_(std::move(inner_variable)), slices_(std::move(slices)) {}

  static BiSeries one(std::string inner_variable, int truncation) {
    std::vector<LaurentPolynomial<Scalar>> slices(static_cast<std::size_t>(std::max(0, truncation)));
    if (!slices.empty()) slices[0] = LaurentPolynomial<Scalar>::constant(Scalar(1));
    return BiSeries(std::move(inner_variable), std::move(slices));
  }

  const std::string& inner_variable() const { return inner_variable_; }
  int truncation() const { return static_cast<int>(slices_.size()); }

  /// The q^h coefficient. Throws std::out_of_range unless 0 <= h < truncation().
  const LaurentPolynomial<Scalar>& slice(int h) const {
    if (h < 0 || h >= truncation()) {
      throw std::out_of_range("slice q^" + std::to_string(h) + " outside [0, " +
                              std::to_string(truncation()) + ")");
    }
    return slices_[static_cast<std::size_t>(h)];
  }

  std::vector<LaurentPolynomial<Scalar>>& mutable_slices() { return slices_; }
  const std::vector<LaurentPolynomial<Scalar>>& slices() const { return slices_; }

  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.inner_variable_ == b.inner_variable_ && a.slices_ == b.slices_;
  }

 private:
  std::string inner_variable_ = "y";
  std::vector<LaurentPolynomial<Scalar>> slices_;
};

template <typename Scalar>
BiSeries<Scalar> multiply(const BiSeries<Scalar>& a, const BiSeries<Scalar>& b) {
  if (a.inner_variable() != b.inner_variable()) {
    throw std::invalid_argument("inner variable mismatch");
  }
  const int trunc = std::min(a.truncation(), b.truncation());
  std::vector<LaurentPolynomial<Scalar>> out(static_cast<std::size_t>(trunc));
  for (int i = 0; i < trunc; ++i) {
    for (int j = 0; i + j < trunc; ++j) out[static_cast<std::size_t>(i + j)] += a.slice(i) * b.slice(j);
  }
  return BiSeries<Scalar>(a.inner_variable(), std::move(out));
}

using BiSeriesQ = BiSeries<Rational>;

/// Power series in two variables x1, x2, truncated to exponents
/// (i, j) with i < rows and j < cols. Coefficients live in a dense matrix.
template <typename Scalar>
class DoubleSeries {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  DoubleSeries(int rows, int cols) : coefficients_(Matrix::Constant(rows, cols, Scalar(0))) {}
  explicit DoubleSeries(Matrix coefficients) : coefficients_(std::move(coefficients)) {}

  /// s(x1) viewed as a two-variable series; s must be a power series.
  static DoubleSeries in_first(const Series<Scalar>& s, int rows, int cols) {
    return embed(s, rows, cols, true);
  }
  static DoubleSeries in_second(const Series<Scalar>& s, int rows, int cols) {
    return embed(s, rows, cols, false);
  }
  static DoubleSeries monomial(int i, int j, const Scalar& c, int rows, int cols) {
    DoubleSeries out(rows, cols);
    if (i < rows && j < cols) out.coefficients_(i, j) = c;
    return out;
  }

  int rows() const { return static_cast<int>(coefficients_.rows()); }
  int cols() const { return static_cast<int>(coefficients_.cols()); }
  const Scalar& operator()(int i, int j) const { return coefficients_(i, j); }
  Scalar& operator()(int i, int j) { return coefficients_(i, j); }
  const Matrix& matrix() const { return coefficients_; }

  friend DoubleSeries operator+(const DoubleSeries& a, const DoubleSeries& b) {
    check_shape(a, b);
    return DoubleSeries(Matrix(a.coefficients_ + b.coefficients_));
  }
  friend DoubleSeries operator-(const DoubleSeries& a, const DoubleSeries& b) {
    check_shape(a, b);
    return DoubleSeries(Matrix(a.coefficients_ - b.coefficients_));
  }
  friend DoubleSeries operator*(const DoubleSeries& a, const DoubleSeries& b) {
    check_shape(a, b);
    DoubleSeries out(a.rows(), a.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1) {
      for (int j1 = 0; j1 < a.cols(); ++j1) {
        const Scalar& x = a.coefficients_(i1, j1);
        if (x == Scalar(0)) continue;
        for (int i2 = 0; i1 + i2 < a.rows(); ++i2) {
          for (int j2 = 0; j1 + j2 < a.cols(); ++j2) {
            const Scalar& y = b.coefficients_(i2, j2);
            if (y == Scalar(0)) continue;
            out.coefficients_(i1 + i2, j1 + j2) += x * y;
          }
        }
      }
    }
    return out;
  }

  friend bool operator==(const DoubleSeries& a, const DoubleSeries& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.coefficients_ == b.coefficients_;
  }

 private:
  static void check_shape(const DoubleSeries& a, const DoubleSeries& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw std::invalid_argument("double series truncation mismatch");
    }
  }

  static DoubleSeries embed(const Series<Scalar>& s, int rows, int cols, bool first) {
    if (s.valuation() < 0) throw std::invalid_argument("embedding requires a power series");
    const int len = first ? rows : cols;
    if (s.truncation() < len) throw std::invalid_argument("series truncated below requested order");
    DoubleSeries out(rows, cols);
    for (int n = 0; n < len; ++n) {
      if (first) {
        out.coefficients_(n, 0) = s[n];
      } else {
        out.coefficients_(0, n) = s[n];
      }
    }
    return out;
  }

  Matrix coefficients_;
};

}  // namespace k3enum

#endif  // K3ENUM_BISERIES_HPP
