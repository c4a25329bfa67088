#include "k3enum/linalg.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace k3enum {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in lattice arithmetic");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in lattice arithmetic");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in lattice arithmetic");
  return out;
}

// Elementary operations on a matrix together with the bookkeeping for the
// left/right transforms.
struct SmithWork {
  IntMatrix a, left, left_inverse, right;

  // row_i -= q * row_t
  void row_axpy(Eigen::Index i, Eigen::Index t, std::int64_t q) {
    if (q == 0) return;
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = checked_sub(a(i, j), checked_mul(q, a(t, j)));
    for (Eigen::Index j = 0; j < left.cols(); ++j) left(i, j) = checked_sub(left(i, j), checked_mul(q, left(t, j)));
    for (Eigen::Index k = 0; k < left_inverse.rows(); ++k) {
      left_inverse(k, t) = checked_add(left_inverse(k, t), checked_mul(q, left_inverse(k, i)));
    }
  }
  // col_j -= q * col_t
  void col_axpy(Eigen::Index j, Eigen::Index t, std::int64_t q) {
    if (q == 0) return;
    for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, j) = checked_sub(a(i, j), checked_mul(q, a(i, t)));
    for (Eigen::Index i = 0; i < right.rows(); ++i) right(i, j) = checked_sub(right(i, j), checked_mul(q, right(i, t)));
  }
  void swap_rows(Eigen::Index i, Eigen::Index k) {
    if (i == k) return;
    a.row(i).swap(a.row(k));
    left.row(i).swap(left.row(k));
    left_inverse.col(i).swap(left_inverse.col(k));
  }
  void swap_cols(Eigen::Index j, Eigen::Index k) {
    if (j == k) return;
    a.col(j).swap(a.col(k));
    right.col(j).swap(right.col(k));
  }
  void negate_row(Eigen::Index i) {
    a.row(i) = -a.row(i);
    left.row(i) = -left.row(i);
    left_inverse.col(i) = -left_inverse.col(i);
  }
};

std::int64_t abs64(std::int64_t x) {
  if (x == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("int64 overflow");
  return x < 0 ? -x : x;
}

}  // namespace

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::domain_error("integer " + x.get_str() + " exceeds int64");
  return x.get_si();
}

IntMatrix to_integer(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_int64(m(i, j).to_integer());
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = Integer(static_cast<long>(m(i, j)));
  }
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < a.size() && a[swap][k] == 0) ++swap;
      if (swap == a.size()) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      for (std::size_t j = k + 1; j < a.size(); ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a.back().back();
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational det(1);
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      a.row(p).swap(a.row(k));
      det = -det;
    }
    det *= a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / a(k, k);
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

int SmithForm::rank() const {
  int r = 0;
  for (Eigen::Index i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) {
    if (diagonal(i, i) != 0) ++r;
  }
  return r;
}

std::vector<std::int64_t> SmithForm::invariant_factors() const {
  std::vector<std::int64_t> out;
  for (Eigen::Index i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  const Eigen::Index m = input.rows();
  const Eigen::Index n = input.cols();
  SmithWork w{input, IntMatrix::Identity(m, m), IntMatrix::Identity(m, m), IntMatrix::Identity(n, n)};
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < m; ++i) {
        for (Eigen::Index j = t; j < n; ++j) {
          if (w.a(i, j) != 0 && (pi < 0 || abs64(w.a(i, j)) < abs64(w.a(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      const std::int64_t p = w.a(t, t);
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        w.row_axpy(i, t, w.a(i, t) / p);
        if (w.a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        w.col_axpy(j, t, w.a(t, j) / p);
        if (w.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i) {
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (w.a(i, j) % p != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      w.row_axpy(t, bad, -1);
    }
    if (t < m && t < n && w.a(t, t) < 0) w.negate_row(t);
  }
  return {std::move(w.left), std::move(w.left_inverse), std::move(w.a), std::move(w.right)};
}

Inertia inertia(const IntMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols() || symmetric != symmetric.transpose()) {
    throw std::invalid_argument("inertia requires a symmetric matrix");
  }
  RationalMatrix a = to_rational(symmetric);
  std::vector<Eigen::Index> active(static_cast<std::size_t>(a.rows()));
  std::iota(active.begin(), active.end(), 0);
  Inertia out;
  while (!active.empty()) {
    std::size_t pivot = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (!a(active[k], active[k]).is_zero()) {
        pivot = k;
        break;
      }
    }
    if (pivot == active.size()) {
      // Zero diagonal: combine two indices with a nonzero off-diagonal entry.
      bool found = false;
      for (std::size_t x = 0; x < active.size() && !found; ++x) {
        for (std::size_t y = x + 1; y < active.size() && !found; ++y) {
          const Eigen::Index i = active[x], j = active[y];
          if (a(i, j).is_zero()) continue;
          a.row(i) += a.row(j);
          a.col(i) += a.col(j);
          found = true;
          pivot = x;
        }
      }
      if (!found) {
        out.zero += static_cast<int>(active.size());
        break;
      }
    }
    const Eigen::Index k = active[pivot];
    const Rational d = a(k, k);
    (d.sign() > 0 ? out.positive : out.negative) += 1;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
    for (Eigen::Index i : active) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / d;
      for (Eigen::Index j : active) a(i, j) -= f * a(k, j);
    }
    for (Eigen::Index i : active) a(i, k) = a(k, i) = Rational(0);
  }
  return out;
}

std::vector<int> row_reduce(RationalMatrix& m) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

LinearSolve solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const std::vector<int> pivots = row_reduce(aug);
  LinearSolve out;
  out.consistent = pivots.empty() || pivots.back() != a.cols();
  out.rank = static_cast<int>(pivots.size()) - (out.consistent ? 0 : 1);
  if (out.consistent) {
    RationalVector x = RationalVector::Constant(a.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
    out.solution = std::move(x);
  }
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  RationalMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RationalMatrix::Identity(n, n);
  const std::vector<int> pivots = row_reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[static_cast<std::size_t>(n - 1)] != n - 1)) {
    throw std::domain_error("matrix is singular");
  }
  return aug.rightCols(n);
}

std::int64_t gcd_of(const IntVector& v) {
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
  return g;
}

}  // namespace k3enum
