#ifndef K3ENUM_LATTICE_HPP
#define K3ENUM_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "k3enum/linalg.hpp"
#include "k3enum/rational.hpp"
#include "k3enum/series.hpp"

namespace k3enum {

/// Even nondegenerate lattice given by its Gram matrix in a fixed basis
/// v_1..v_r.
class GramLattice {
 public:
  /// Throws std::invalid_argument unless gram is square, nonempty,
  /// symmetric, has even diagonal and nonzero determinant.
  explicit GramLattice(IntMatrix gram);

  int rank() const { return static_cast<int>(gram_.rows()); }
  const IntMatrix& gram() const { return gram_; }
  const Integer& determinant() const { return determinant_; }
  /// (positive, negative) index of inertia; zero is always 0.
  const Inertia& signature() const { return signature_; }
  bool is_hyperbolic() const { return signature_.positive == 1; }

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  Integer determinant_;
  Inertia signature_;
};

GramLattice make_U();
GramLattice make_E8neg();
/// U^3 + E8(-1)^2, rank 22.
GramLattice make_K3();
/// <value>, value even and nonzero.
GramLattice make_rank_one(std::int64_t value);
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

/// (-1)^(r-1) det. Throws std::logic_error if the lattice has signature
/// (1, r-1) and the result is not positive.
Integer discriminant(const GramLattice& lattice);

/// G = L^* / L, with L^* identified with integer functionals (values on
/// v_1..v_r) and L embedded by x -> gram x.
class DiscriminantGroup {
 public:
  explicit DiscriminantGroup(const IntMatrix& nondegenerate_gram);
  explicit DiscriminantGroup(const GramLattice& lattice) : DiscriminantGroup(lattice.gram()) {}

  /// Orders of the nontrivial cyclic factors, each dividing the next.
  const std::vector<std::int64_t>& factor_orders() const { return orders_; }
  Integer order() const;
  bool is_trivial() const { return orders_.empty(); }

  /// Functionals (columns) generating the cyclic factors.
  IntMatrix generators() const;

  /// Coordinates of the class of a functional, entry i in [0, order_i).
  std::vector<std::int64_t> reduce(const IntVector& functional) const;
  /// Lexicographically smaller of reduce(f) and reduce(-f).
  std::vector<std::int64_t> canonical(const IntVector& functional) const;

  /// Element with the given coordinates as a rational vector x with
  /// gram x equal to a functional in that class.
  RationalVector lift(const std::vector<std::int64_t>& coordinates) const;

 private:
  SmithForm smith_;
  int first_;  // index of the first diagonal entry > 1
  std::vector<std::int64_t> orders_;
};

/// Lattice Lambda extended by one vector with <v_i, v> = d_i and <v, v> = 2h - 2.
struct NLDatum {
  IntMatrix base_gram;
  std::int64_t h = 0;
  IntVector d;
  IntMatrix bordered;
  /// (-1)^r det(bordered).
  Integer discriminant;
  /// Canonical class of v_i -> d_i in G(Lambda) / +-.
  std::vector<std::int64_t> coset;
};

/// Throws std::invalid_argument if d has the wrong length.
NLDatum extend_gram(const GramLattice& base, std::int64_t h, const IntVector& d);

/// Rank r+1 even lattice with a primitive embedding of Lambda.
struct OverlatticeDatum {
  IntMatrix base_gram;
  IntMatrix gram;
  /// (r+1) x r; column i holds the coordinates of the image of v_i.
  IntMatrix embedding;
  /// Index over the bordered lattice it was built from (1 when built directly).
  std::int64_t index = 1;
  /// (-1)^r det(gram).
  Integer discriminant;
  std::vector<std::int64_t> coset;
  /// A vector completing the image of Lambda to a basis.
  IntVector splitting_vector;
};

/// Validates and computes (discriminant, coset). Throws std::invalid_argument
/// if gram is not even, symmetric and nondegenerate, if the embedding does
/// not reproduce the base Gram matrix, or if it is not primitive.
OverlatticeDatum make_overlattice(const GramLattice& base, IntMatrix gram, IntMatrix embedding);

/// The bordered lattice itself as an overlattice datum (index 1).
OverlatticeDatum bordered_overlattice(const GramLattice& base, std::int64_t h, const IntVector& d);

/// All beta in the lattice with <beta, beta> = 2h - 2 and <beta, v_i> = d_i,
/// sorted. Throws std::invalid_argument unless the lattice has signature
/// (1, r) and the orthogonal complement of Lambda is negative definite.
std::vector<IntVector> nl_representations(const OverlatticeDatum& o, std::int64_t h, const IntVector& d);
std::int64_t nl_multiplicity(const OverlatticeDatum& o, std::int64_t h, const IntVector& d);

/// gcd of the coordinates. Throws std::invalid_argument for the zero vector.
std::int64_t divisibility(const IntVector& beta);

/// Representations of divisibility exactly m (m >= 1).
std::int64_t refined_multiplicity(const OverlatticeDatum& o, std::int64_t m, std::int64_t h, const IntVector& d);

/// Even overlattices of the bordered lattice of n containing Lambda
/// primitively, one per isotropic subgroup of its discriminant group. The
/// first entry is the bordered lattice itself. Throws std::invalid_argument
/// when the discriminant of n is not positive.
std::vector<OverlatticeDatum> overlattices(const NLDatum& n);

struct BorcherdsIndex {
  std::vector<std::int64_t> coset;  ///< component label gamma (canonical, G/+-)
  Integer discriminant;             ///< Delta(h, d)
  Integer lattice_discriminant;     ///< l = Delta(Lambda)
  Rational exponent;                ///< Delta(h, d) / (2 l)
  Rational weight;                  ///< (22 - r) / 2
  bool hodge_bundle = false;        ///< Delta(h, d) == 0
  bool vanishes = false;            ///< Delta(h, d) < 0
};

BorcherdsIndex borcherds_index(const GramLattice& base, std::int64_t h, const IntVector& d);

/// Coefficient of phi at Delta(h, d) / (2 l); zero when Delta(h, d) < 0.
/// Throws std::invalid_argument for a nontrivial discriminant group or a
/// non-integral exponent, std::out_of_range beyond phi's truncation.
Rational nl_lookup(const LaurentSeries& phi, const GramLattice& base, std::int64_t h, const IntVector& d);

}  // namespace k3enum

#endif  // K3ENUM_LATTICE_HPP
