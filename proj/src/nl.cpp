#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "k3enum/lattice.hpp"

namespace k3enum {

namespace {

using BigVector = std::vector<Integer>;

Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

BigVector times(const IntMatrix& m, const BigVector& x) {
  BigVector out(static_cast<std::size_t>(m.rows()), Integer(0));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)] += big(m(i, j)) * x[static_cast<std::size_t>(j)];
  }
  return out;
}

Integer pairing(const IntMatrix& gram, const BigVector& x, const BigVector& y) {
  const BigVector gy = times(gram, y);
  Integer out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * gy[i];
  return out;
}

BigVector column(const IntMatrix& m, Eigen::Index j) {
  BigVector out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(big(m(i, j)));
  return out;
}

IntVector to_int_vector(const BigVector& x) {
  IntVector out(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out(static_cast<Eigen::Index>(i)) = to_int64(x[i]);
  return out;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

void check_even_symmetric(const IntMatrix& gram) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("Gram matrix must be square");
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    if (gram(i, i) % 2 != 0) throw std::invalid_argument("Gram matrix must have even diagonal");
    for (Eigen::Index j = 0; j < i; ++j) {
      if (gram(i, j) != gram(j, i)) throw std::invalid_argument("Gram matrix must be symmetric");
    }
  }
}

}  // namespace

OverlatticeDatum make_overlattice(const GramLattice& base, IntMatrix gram, IntMatrix embedding) {
  const int r = base.rank();
  if (gram.rows() != r + 1) throw std::invalid_argument("overlattice must have rank r + 1 = " + std::to_string(r + 1));
  if (embedding.rows() != r + 1 || embedding.cols() != r) throw std::invalid_argument("embedding must be (r+1) x r");
  check_even_symmetric(gram);
  const Integer det = determinant(gram);
  if (det == 0) throw std::invalid_argument("overlattice Gram matrix is degenerate");
  if (IntMatrix(embedding.transpose() * gram * embedding) != base.gram()) {
    throw std::invalid_argument("embedding does not reproduce the base Gram matrix");
  }
  const SmithForm s = smith_normal_form(embedding);
  for (auto f : s.invariant_factors()) {
    if (f != 1) throw std::invalid_argument("embedding is not primitive");
  }
  OverlatticeDatum out;
  out.base_gram = base.gram();
  out.splitting_vector = s.left_inverse.col(r);
  out.discriminant = r % 2 == 0 ? det : Integer(-det);
  out.coset = DiscriminantGroup(base).canonical(IntVector(embedding.transpose() * gram * out.splitting_vector));
  out.gram = std::move(gram);
  out.embedding = std::move(embedding);
  return out;
}

OverlatticeDatum bordered_overlattice(const GramLattice& base, std::int64_t h, const IntVector& d) {
  const NLDatum n = extend_gram(base, h, d);
  const int r = base.rank();
  IntMatrix e = IntMatrix::Zero(r + 1, r);
  e.topRows(r) = IntMatrix::Identity(r, r);
  return make_overlattice(base, n.bordered, e);
}

std::vector<IntVector> nl_representations(const OverlatticeDatum& o, std::int64_t h, const IntVector& d) {
  const Eigen::Index r = o.embedding.cols();
  const Eigen::Index n = o.gram.rows();
  if (d.size() != r) throw std::invalid_argument("d must have one entry per basis vector of the base lattice");
  const Inertia sig = inertia(o.gram);
  if (sig.positive != 1 || sig.negative != n - 1) {
    throw std::invalid_argument("lattice must have signature (1, " + std::to_string(n - 1) + ")");
  }
  // <beta, v_i> = d_i: A beta = d with A = E^T M.
  const IntMatrix a = o.embedding.transpose() * o.gram;
  const SmithForm s = smith_normal_form(a);
  const BigVector ud = times(s.left, column(IntMatrix(d), 0));
  BigVector y(static_cast<std::size_t>(n), Integer(0));
  for (Eigen::Index i = 0; i < r; ++i) {
    const Integer di = big(s.diagonal(i, i));
    if (di == 0) throw std::logic_error("embedding pairing matrix has deficient rank");
    if (ud[static_cast<std::size_t>(i)] % di != 0) return {};
    y[static_cast<std::size_t>(i)] = ud[static_cast<std::size_t>(i)] / di;
  }
  const BigVector beta0 = times(s.right, y);
  const BigVector kernel = column(s.right, n - 1);
  // (beta0 + t kernel)^2 = 2h - 2
  const Integer qa = pairing(o.gram, kernel, kernel);
  if (qa >= 0) throw std::invalid_argument("orthogonal complement of the base lattice is not negative definite");
  const Integer qb = 2 * pairing(o.gram, kernel, beta0);
  const Integer qc = pairing(o.gram, beta0, beta0) - big(2 * h - 2);
  const Integer disc = qb * qb - 4 * qa * qc;
  if (disc < 0) return {};
  Integer root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  if (root * root != disc) return {};
  std::set<Integer> ts;
  for (const Integer& num : {Integer(-qb + root), Integer(-qb - root)}) {
    const Integer den = 2 * qa;
    if (num % den == 0) ts.insert(num / den);
  }
  std::vector<IntVector> out;
  for (const Integer& t : ts) {
    BigVector beta(beta0);
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += t * kernel[i];
    out.push_back(to_int_vector(beta));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::int64_t nl_multiplicity(const OverlatticeDatum& o, std::int64_t h, const IntVector& d) {
  return static_cast<std::int64_t>(nl_representations(o, h, d).size());
}

std::int64_t divisibility(const IntVector& beta) {
  const std::int64_t g = gcd_of(beta);
  if (g == 0) throw std::invalid_argument("divisibility of the zero vector");
  return g;
}

std::int64_t refined_multiplicity(const OverlatticeDatum& o, std::int64_t m, std::int64_t h, const IntVector& d) {
  if (m < 1) throw std::invalid_argument("divisibility m must be >= 1");
  std::int64_t count = 0;
  for (const auto& beta : nl_representations(o, h, d)) {
    if (!beta.isZero() && divisibility(beta) == m) ++count;
  }
  return count;
}

namespace {

// Elements of a finite abelian group with the given cyclic orders, encoded in
// mixed radix.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
    size_ = 1;
    for (auto o : orders_) {
      if (size_ > kMaxOrder / o) throw std::invalid_argument("discriminant group too large to enumerate subgroups");
      size_ *= o;
    }
  }

  std::int64_t size() const { return size_; }

  std::vector<std::int64_t> decode(std::int64_t code) const {
    std::vector<std::int64_t> out(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
      out[i] = code % orders_[i];
      code /= orders_[i];
    }
    return out;
  }

  std::int64_t encode(const std::vector<std::int64_t>& a) const {
    std::int64_t code = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) code = code * orders_[i] + a[i];
    return code;
  }

  std::int64_t add(std::int64_t x, std::int64_t y) const {
    auto a = decode(x);
    const auto b = decode(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % orders_[i];
    return encode(a);
  }

  std::set<std::int64_t> closure(std::set<std::int64_t> elements, std::int64_t extra) const {
    std::vector<std::int64_t> frontier{extra};
    while (!frontier.empty()) {
      const std::int64_t g = frontier.back();
      frontier.pop_back();
      if (elements.contains(g)) continue;
      std::vector<std::int64_t> fresh;
      for (std::int64_t e : elements) fresh.push_back(add(e, g));
      elements.insert(g);
      for (std::int64_t f : fresh) {
        if (!elements.contains(f)) frontier.push_back(f);
      }
      frontier.push_back(add(g, g));
    }
    return elements;
  }

 private:
  static constexpr std::int64_t kMaxOrder = 1'000'000;
  std::vector<std::int64_t> orders_;
  std::int64_t size_;
};

}  // namespace

std::vector<OverlatticeDatum> overlattices(const NLDatum& nl) {
  if (nl.discriminant <= 0) {
    throw std::invalid_argument("overlattices: Delta(h, d) = " + nl.discriminant.get_str() + " is not positive");
  }
  const GramLattice base(nl.base_gram);
  const IntMatrix& m = nl.bordered;
  const Eigen::Index n = m.rows();
  const int r = base.rank();
  const DiscriminantGroup dg(m);
  const FiniteGroup group(dg.factor_orders());
  const RationalMatrix mq = to_rational(m);

  std::vector<RationalVector> lifts(static_cast<std::size_t>(group.size()));
  std::vector<bool> isotropic(static_cast<std::size_t>(group.size()));
  for (std::int64_t code = 0; code < group.size(); ++code) {
    const RationalVector x = dg.lift(group.decode(code));
    const Rational q = x.dot(mq * x);
    lifts[static_cast<std::size_t>(code)] = x;
    isotropic[static_cast<std::size_t>(code)] = q.is_integer() && q.numerator() % 2 == 0;
  }

  // Breadth-first over subgroups generated by isotropic elements.
  std::set<std::set<std::int64_t>> seen{{0}};
  std::vector<std::set<std::int64_t>> queue{{0}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto current = queue[head];
    for (std::int64_t g = 1; g < group.size(); ++g) {
      if (!isotropic[static_cast<std::size_t>(g)] || current.contains(g)) continue;
      auto next = group.closure(current, g);
      if (seen.contains(next)) continue;
      const bool ok = std::all_of(next.begin(), next.end(), [&](std::int64_t e) { return isotropic[static_cast<std::size_t>(e)]; });
      seen.insert(next);
      if (ok) queue.push_back(std::move(next));
    }
  }
  std::sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  IntMatrix embedding = IntMatrix::Zero(n, r);
  embedding.topRows(r) = IntMatrix::Identity(r, r);
  std::vector<OverlatticeDatum> out;
  for (const auto& subgroup : queue) {
    const auto index = static_cast<std::int64_t>(subgroup.size());
    // Basis of L + H: Smith form of index * [I | lifts].
    IntMatrix gens(n, n + index);
    gens.leftCols(n) = IntMatrix::Identity(n, n) * index;
    Eigen::Index col = n;
    for (std::int64_t e : subgroup) {
      const RationalVector scaled = lifts[static_cast<std::size_t>(e)] * Rational(index);
      for (Eigen::Index i = 0; i < n; ++i) gens(i, col) = to_int64(scaled(i).to_integer());
      ++col;
    }
    const SmithForm s = smith_normal_form(gens);
    RationalMatrix basis(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        basis(i, j) = Rational(s.left_inverse(i, j)) * Rational(s.diagonal(j, j)) / Rational(index);
      }
    }
    const IntMatrix gram = to_integer(RationalMatrix(basis.transpose() * mq * basis));
    const IntMatrix new_embedding = to_integer(RationalMatrix(inverse(basis) * to_rational(embedding)));
    if (smith_normal_form(new_embedding).invariant_factors() != std::vector<std::int64_t>(static_cast<std::size_t>(r), 1)) {
      continue;  // Lambda not primitive in this overlattice
    }
    OverlatticeDatum o = make_overlattice(base, gram, new_embedding);
    o.index = index;
    out.push_back(std::move(o));
  }
  return out;
}

BorcherdsIndex borcherds_index(const GramLattice& base, std::int64_t h, const IntVector& d) {
  const NLDatum nl = extend_gram(base, h, d);
  BorcherdsIndex out;
  out.coset = nl.coset;
  out.discriminant = nl.discriminant;
  out.lattice_discriminant = discriminant(base);
  out.exponent = Rational(nl.discriminant) / (Rational(2) * Rational(out.lattice_discriminant));
  out.weight = Rational(Integer(22 - base.rank()), Integer(2));
  out.hodge_bundle = nl.discriminant == 0;
  out.vanishes = nl.discriminant < 0;
  return out;
}

Rational nl_lookup(const LaurentSeries& phi, const GramLattice& base, std::int64_t h, const IntVector& d) {
  if (!DiscriminantGroup(base).is_trivial()) {
    throw std::invalid_argument("nl_lookup supports lattices with trivial discriminant group only");
  }
  const BorcherdsIndex idx = borcherds_index(base, h, d);
  if (idx.vanishes) return Rational(0);
  if (!idx.exponent.is_integer()) {
    throw std::invalid_argument("non-integral exponent " + idx.exponent.to_string() + " for a trivial discriminant group");
  }
  return phi[static_cast<int>(to_int64(idx.exponent.to_integer()))];
}

}  // namespace k3enum
