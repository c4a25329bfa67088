#include "k3enum/lattice.hpp"

#include <stdexcept>
#include <string>

namespace k3enum {

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols()) throw std::invalid_argument("Gram matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i) % 2 != 0) throw std::invalid_argument("Gram matrix must have even diagonal (even lattice)");
    for (Eigen::Index j = 0; j < i; ++j) {
      if (gram_(i, j) != gram_(j, i)) throw std::invalid_argument("Gram matrix must be symmetric");
    }
  }
  determinant_ = k3enum::determinant(gram_);
  if (determinant_ == 0) throw std::invalid_argument("Gram matrix is degenerate");
  signature_ = inertia(gram_);
}

GramLattice make_U() {
  IntMatrix g(2, 2);
  g << 0, 1, 1, 0;
  return GramLattice(g);
}

GramLattice make_E8neg() {
  IntMatrix g(8, 8);
  g << -2, 0, 1, 0, 0, 0, 0, 0,
       0, -2, 0, 1, 0, 0, 0, 0,
       1, 0, -2, 1, 0, 0, 0, 0,
       0, 1, 1, -2, 1, 0, 0, 0,
       0, 0, 0, 1, -2, 1, 0, 0,
       0, 0, 0, 0, 1, -2, 1, 0,
       0, 0, 0, 0, 0, 1, -2, 1,
       0, 0, 0, 0, 0, 0, 1, -2;
  return GramLattice(g);
}

GramLattice make_K3() {
  const GramLattice u = make_U();
  const GramLattice e8 = make_E8neg();
  return direct_sum(direct_sum(direct_sum(u, u), direct_sum(u, e8)), e8);
}

GramLattice make_rank_one(std::int64_t value) {
  IntMatrix g(1, 1);
  g << value;
  return GramLattice(g);
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  IntMatrix g = IntMatrix::Zero(a.rank() + b.rank(), a.rank() + b.rank());
  g.topLeftCorner(a.rank(), a.rank()) = a.gram();
  g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
  return GramLattice(g);
}

Integer discriminant(const GramLattice& lattice) {
  const Integer out = (lattice.rank() - 1) % 2 == 0 ? lattice.determinant() : Integer(-lattice.determinant());
  if (lattice.signature().positive == 1 && out <= 0) {
    throw std::logic_error("hyperbolic lattice with non-positive discriminant");
  }
  return out;
}

DiscriminantGroup::DiscriminantGroup(const IntMatrix& gram) : smith_(smith_normal_form(gram)) {
  if (gram.rows() != gram.cols() || smith_.rank() != gram.rows()) {
    throw std::invalid_argument("discriminant group needs a nondegenerate Gram matrix");
  }
  first_ = 0;
  while (first_ < gram.rows() && smith_.diagonal(first_, first_) == 1) ++first_;
  for (Eigen::Index i = first_; i < gram.rows(); ++i) orders_.push_back(smith_.diagonal(i, i));
}

Integer DiscriminantGroup::order() const {
  Integer out = 1;
  for (auto o : orders_) out *= Integer(static_cast<long>(o));
  return out;
}

IntMatrix DiscriminantGroup::generators() const {
  // The class of U^-1 e_i has coordinates e_i.
  return smith_.left_inverse.rightCols(static_cast<Eigen::Index>(orders_.size()));
}

std::vector<std::int64_t> DiscriminantGroup::reduce(const IntVector& functional) const {
  if (functional.size() != smith_.left.cols()) throw std::invalid_argument("functional has the wrong length");
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const Eigen::Index i = first_ + static_cast<Eigen::Index>(k);
    Integer c = 0;
    for (Eigen::Index j = 0; j < functional.size(); ++j) {
      c += Integer(static_cast<long>(smith_.left(i, j))) * Integer(static_cast<long>(functional(j)));
    }
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), Integer(static_cast<long>(orders_[k])).get_mpz_t());
    out.push_back(r.get_si());
  }
  return out;
}

std::vector<std::int64_t> DiscriminantGroup::canonical(const IntVector& functional) const {
  auto plus = reduce(functional);
  auto minus = plus;
  for (std::size_t k = 0; k < minus.size(); ++k) minus[k] = (orders_[k] - minus[k]) % orders_[k];
  return std::min(plus, minus);
}

RationalVector DiscriminantGroup::lift(const std::vector<std::int64_t>& coordinates) const {
  if (coordinates.size() != orders_.size()) throw std::invalid_argument("coordinates have the wrong length");
  const Eigen::Index n = smith_.right.rows();
  RationalVector x = RationalVector::Constant(n, Rational(0));
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const Eigen::Index i = first_ + static_cast<Eigen::Index>(k);
    const Rational a(Integer(static_cast<long>(coordinates[k])), Integer(static_cast<long>(orders_[k])));
    for (Eigen::Index row = 0; row < n; ++row) x(row) += Rational(smith_.right(row, i)) * a;
  }
  return x;
}

NLDatum extend_gram(const GramLattice& base, std::int64_t h, const IntVector& d) {
  const int r = base.rank();
  if (d.size() != r) {
    throw std::invalid_argument("d has length " + std::to_string(d.size()) + ", lattice rank is " + std::to_string(r));
  }
  NLDatum out;
  out.base_gram = base.gram();
  out.h = h;
  out.d = d;
  out.bordered = IntMatrix::Zero(r + 1, r + 1);
  out.bordered.topLeftCorner(r, r) = base.gram();
  out.bordered.block(0, r, r, 1) = d;
  out.bordered.block(r, 0, 1, r) = d.transpose();
  out.bordered(r, r) = 2 * h - 2;
  const Integer det = determinant(out.bordered);
  out.discriminant = r % 2 == 0 ? det : Integer(-det);
  out.coset = DiscriminantGroup(base).canonical(d);
  return out;
}

}  // namespace k3enum
