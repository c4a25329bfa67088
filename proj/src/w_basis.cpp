#include "k3enum/w_basis.hpp"

#include <stdexcept>

namespace k3enum {

LaurentPoly w_generator(WBasis basis) {
  const Rational middle = basis == WBasis::Plus ? Rational(2) : Rational(-2);
  return LaurentPoly(-1, {Rational(1), middle, Rational(1)});
}

WPolynomial symmetric_to_w(const LaurentPoly& p, WBasis basis) {
  if (!p.is_symmetric()) throw std::invalid_argument("symmetric_to_w: input is not y <-> 1/y symmetric");
  if (p.is_zero()) return {};
  const int degree = p.max_exponent();
  const LaurentPoly w = w_generator(basis);
  std::vector<LaurentPoly> powers{LaurentPoly::constant(Rational(1))};
  for (int g = 1; g <= degree; ++g) powers.push_back(powers.back() * w);

  // w^g is monic of degree g in y, so peel off the top coefficient.
  WPolynomial out(static_cast<std::size_t>(degree + 1));
  LaurentPoly rest = p;
  for (int g = degree; g >= 0; --g) {
    const Rational c = rest[g];
    out[static_cast<std::size_t>(g)] = c;
    if (!c.is_zero()) rest.add_scaled_shift(powers[static_cast<std::size_t>(g)], -c, 0);
  }
  if (!rest.is_zero()) throw std::logic_error("symmetric_to_w: nonzero remainder");
  return out;
}

LaurentPoly expand_w(const WPolynomial& c, WBasis basis) {
  const LaurentPoly w = w_generator(basis);
  LaurentPoly out;
  LaurentPoly power = LaurentPoly::constant(Rational(1));
  for (std::size_t g = 0; g < c.size(); ++g) {
    out.add_scaled_shift(power, c[g], 0);
    power = power * w;
  }
  return out;
}

}  // namespace k3enum
