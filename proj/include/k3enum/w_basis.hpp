#ifndef K3ENUM_W_BASIS_HPP
#define K3ENUM_W_BASIS_HPP

#include <vector>

#include "k3enum/laurent_polynomial.hpp"
#include "k3enum/rational.hpp"

namespace k3enum {

/// Basis for symmetric Laurent polynomials in y.
///   Plus:  w  = y + 2 + 1/y   ( = -(sqrt(-y) - 1/sqrt(-y))^2 )
///   Minus: w' = y - 2 + 1/y   ( =  (sqrt(y)  - 1/sqrt(y))^2  )
enum class WBasis { Plus, Minus };

/// Coefficients c_0..c_D with p = sum_g c_g w^g.
using WPolynomial = std::vector<Rational>;

/// Rewrites a y <-> 1/y symmetric Laurent polynomial in powers of w. The
/// result has exactly max_exponent(p) + 1 entries (empty for p = 0).
/// Throws std::invalid_argument for an asymmetric input.
WPolynomial symmetric_to_w(const LaurentPoly& p, WBasis basis);

/// Inverse of symmetric_to_w.
LaurentPoly expand_w(const WPolynomial& c, WBasis basis);

/// w (resp. w') as a Laurent polynomial.
LaurentPoly w_generator(WBasis basis);

}  // namespace k3enum

#endif  // K3ENUM_W_BASIS_HPP
