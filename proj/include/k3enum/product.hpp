#ifndef K3ENUM_PRODUCT_HPP
#define K3ENUM_PRODUCT_HPP

#include <string>
#include <vector>

#include "k3enum/biseries.hpp"
#include "k3enum/rational.hpp"

namespace k3enum {

/// One family of factors
///
///   prod_{n >= 1} (1 - coefficient * y^inner_shift * q^(outer_step * n))^exponent.
///
/// coefficient = -1 gives the (1 + y^a q^n) families.
struct FactorFamily {
  int inner_shift = 0;
  Rational coefficient{1};
  int outer_step = 1;
  int exponent = 1;
};

/// A finite product of factor families.
struct ProductSpec {
  std::vector<FactorFamily> families;

  ProductSpec& times(int inner_shift, int exponent, Rational coefficient = Rational(1),
                     int outer_step = 1) {
    families.push_back({inner_shift, std::move(coefficient), outer_step, exponent});
    return *this;
  }
};

/// Expands the product up to (excluding) q^q_trunc. Factors whose q-degree
/// reaches q_trunc contribute nothing and are skipped. Every slice of the
/// result is checked to lie in [-A h, A h] with A the largest |inner_shift|.
///
/// Throws std::invalid_argument for q_trunc < 1 or a family with
/// outer_step < 1 (such a factor is not a unit of the truncated ring).
BiSeriesQ product_expand(const ProductSpec& spec, int q_trunc,
                         const std::string& inner_variable = "y");

/// prod (1 - q^n)^exponent as a one-variable series in q, known below q_trunc.
LaurentSeries eta_product(int exponent, int q_trunc);

/// The K3 two-variable product
///   prod (1-q^n)^-20 (1 + sign y q^n)^-2 (1 + sign y^-1 q^n)^-2,
/// sign = -1 for the (1 - y q^n) form, +1 for the (1 + y q^n) form.
ProductSpec k3_product_spec(int sign);

}  // namespace k3enum

#endif  // K3ENUM_PRODUCT_HPP
