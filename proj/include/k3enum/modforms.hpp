#ifndef K3ENUM_MODFORMS_HPP
#define K3ENUM_MODFORMS_HPP

#include <optional>
#include <vector>

#include "k3enum/biseries.hpp"
#include "k3enum/rational.hpp"
#include "k3enum/series.hpp"

namespace k3enum {

/// B_n for even n >= 2 (B_2 = 1/6). Cached; safe to call concurrently.
Rational bernoulli(int n);

/// sum_{d | n} d^k.
Integer divisor_sigma(int k, int n);

struct EisensteinSeries {
  int weight = 0;
  /// 1 - (2 weight / B_weight) sum sigma_{weight-1}(n) q^n
  LaurentSeries series;
};

/// Normalized Eisenstein series of even weight >= 2, known below q_trunc.
EisensteinSeries eisenstein(int weight, int q_trunc);

/// Delta = q prod (1 - q^n)^24, known below q_trunc (>= 2).
LaurentSeries delta_series(int q_trunc);

/// J = q j(q) = E4^3 / (Delta / q) = 1 + 744 q + 196884 q^2 + ...
LaurentSeries j_series(int q_trunc);

/// f = E4 E6 / Delta = sum_{n >= -1} c(n) q^n, known below q_trunc.
LaurentSeries f_series(int q_trunc);

/// E2^a E4^b E6^c.
struct EisensteinMonomial {
  int e2 = 0;
  int e4 = 0;
  int e6 = 0;

  int weight() const { return 2 * e2 + 4 * e4 + 6 * e6; }
  friend bool operator==(const EisensteinMonomial&, const EisensteinMonomial&) = default;
};

/// All monomials of the given even weight, ordered by (e2, e4) descending.
std::vector<EisensteinMonomial> quasimodular_basis(int weight);

struct QuasimodularDecomposition {
  int weight = 0;
  std::vector<EisensteinMonomial> monomials;
  std::vector<Rational> coefficients;
  /// Known coefficients of the input beyond those needed for a unique solve.
  int surplus_checked = 0;
};

/// Sum of the decomposition's terms, known below q_trunc.
LaurentSeries expand(const QuasimodularDecomposition& d, int q_trunc);

/// Minimal number of known coefficients accepted by quasimodular_recognize.
inline constexpr int kRecognitionSurplus = 10;

/// Writes s as a level-1 quasimodular form of the given weight over
/// E2, E4, E6, by an exact linear solve over every known coefficient.
/// Returns nullopt when no such combination reproduces s.
///
/// Throws std::invalid_argument when s is not a power series, the weight is
/// odd or negative, or fewer than (basis size + 10) coefficients are known,
/// or the known coefficients do not pin the solution down.
std::optional<QuasimodularDecomposition> quasimodular_recognize(const LaurentSeries& s, int weight);

// ---------------------------------------------------------------------------
// Harvey-Moore identity
//
//   f(t1) E4(t2) / (j(t1) - j(t2)) = q1/(q2 - q1) + E4(t2) - S,
//   S = sum_{d,k,l > 0} l^3 c(kl) q1^(kd) q2^(ld),
//
// checked in the denominator-cleared form
//
//   (q1 f(q1)) E4(q2) (q1 - q2) q2 = [(q1 - q2)(E4(q2) - S) - q1] (q2 J(q1) - q1 J(q2)).
//
// The polar term carries a minus sign relative to the usual printed form
// q1/(q1 - q2): both sides must vanish as q2 -> 0.

/// The series entering the cleared identity. Mutable so tests can perturb
/// single coefficients.
struct HarveyMooreInputs {
  int order = 0;             ///< bidegree bound N; all series known to q^N
  LaurentSeries f;           ///< f = sum c(n) q^n, n >= -1
  LaurentSeries e4;          ///< E4
  LaurentSeries j;           ///< J = q j
  DoubleSeries<Rational> s;  ///< S, exponents (i, j) <= (N, N)
};

struct HarveyMooreDiscrepancy {
  int q1_exponent = 0;
  int q2_exponent = 0;
  Rational lhs;
  Rational rhs;
};

struct HarveyMooreReport {
  int order = 0;
  bool pass = false;
  std::optional<HarveyMooreDiscrepancy> first_discrepancy;
};

/// S from the coefficients of f.
DoubleSeries<Rational> harvey_moore_sum(const LaurentSeries& f, int order);

HarveyMooreInputs harvey_moore_inputs(int order);

/// Compares every coefficient q1^i q2^j with i, j <= order. order >= 2.
HarveyMooreReport harvey_moore_check(const HarveyMooreInputs& inputs);
HarveyMooreReport harvey_moore_check(int order);

}  // namespace k3enum

#endif  // K3ENUM_MODFORMS_HPP
