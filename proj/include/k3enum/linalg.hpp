#ifndef K3ENUM_LINALG_HPP
#define K3ENUM_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "k3enum/rational.hpp"

namespace k3enum {

template <typename Scalar>
using DynamicMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DynamicVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DynamicMatrix<std::int64_t>;
using IntVector = DynamicVector<std::int64_t>;
using RationalMatrix = DynamicMatrix<Rational>;
using RationalVector = DynamicVector<Rational>;

RationalMatrix to_rational(const IntMatrix& m);

/// Entrywise conversion; throws std::domain_error if an entry is not an
/// integer or does not fit in 64 bits.
IntMatrix to_integer(const RationalMatrix& m);

std::int64_t to_int64(const Integer& x);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);
Rational determinant(const RationalMatrix& m);

/// left * input * right == diagonal with diagonal(i, i) >= 0 and each
/// nonzero diagonal entry dividing the next. left and right are unimodular;
/// left_inverse is kept alongside left.
struct SmithForm {
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix diagonal;
  IntMatrix right;

  /// Number of nonzero diagonal entries.
  int rank() const;
  std::vector<std::int64_t> invariant_factors() const;
};

/// Throws std::overflow_error if an intermediate leaves the int64 range.
SmithForm smith_normal_form(const IntMatrix& input);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric matrix, by exact congruence
/// diagonalization.
Inertia inertia(const IntMatrix& symmetric);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(RationalMatrix& m);

struct LinearSolve {
  int rank = 0;
  bool consistent = false;
  /// Set when consistent; free variables are zero.
  std::optional<RationalVector> solution;
};

LinearSolve solve(const RationalMatrix& a, const RationalVector& b);

/// Throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

std::int64_t gcd_of(const IntVector& v);

}  // namespace k3enum

#endif  // K3ENUM_LINALG_HPP
