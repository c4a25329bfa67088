#include "k3enum/product.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace k3enum {

namespace {

// slices *= (1 - c y^a q^m)^e, in place, truncated at slices.size().
void apply_factor(std::vector<LaurentPoly>& slices, const Rational& c, int a, int m, int e) {
  const int trunc = static_cast<int>(slices.size());
  if (e > 0) {
    for (int rep = 0; rep < e; ++rep) {
      for (int k = trunc - 1; k >= m; --k) {
        slices[static_cast<std::size_t>(k)].add_scaled_shift(slices[static_cast<std::size_t>(k - m)], -c, a);
      }
    }
  } else {
    // Division by (1 - x): b_k += x b_{k-m}, ascending.
    for (int rep = 0; rep < -e; ++rep) {
      for (int k = m; k < trunc; ++k) {
        slices[static_cast<std::size_t>(k)].add_scaled_shift(slices[static_cast<std::size_t>(k - m)], c, a);
      }
    }
  }
}

}  // namespace

BiSeriesQ product_expand(const ProductSpec& spec, int q_trunc, const std::string& inner_variable) {
  if (q_trunc < 1) throw std::invalid_argument("product_expand needs q_trunc >= 1");
  int max_shift = 0;
  for (const auto& family : spec.families) {
    if (family.outer_step < 1) {
      throw std::invalid_argument("factor family with outer step " +
                                  std::to_string(family.outer_step) + " is not a unit");
    }
    max_shift = std::max(max_shift, std::abs(family.inner_shift));
  }
  BiSeriesQ out = BiSeriesQ::one(inner_variable, q_trunc);
  auto& slices = out.mutable_slices();
  for (const auto& family : spec.families) {
    if (family.exponent == 0 || family.coefficient.is_zero()) continue;
    for (int n = 1; family.outer_step * n < q_trunc; ++n) {
      apply_factor(slices, family.coefficient, family.inner_shift, family.outer_step * n,
                   family.exponent);
    }
  }
  for (int h = 0; h < q_trunc; ++h) {
    const auto& s = slices[static_cast<std::size_t>(h)];
    if (!s.is_zero() && (s.min_exponent() < -max_shift * h || s.max_exponent() > max_shift * h)) {
      throw std::logic_error("product slice q^" + std::to_string(h) + " exceeds its support bound");
    }
  }
  return out;
}

LaurentSeries eta_product(int exponent, int q_trunc) {
  const BiSeriesQ b = product_expand(ProductSpec{}.times(0, exponent), q_trunc);
  std::vector<Rational> coefficients;
  coefficients.reserve(static_cast<std::size_t>(q_trunc));
  for (int h = 0; h < q_trunc; ++h) coefficients.push_back(b.slice(h)[0]);
  return LaurentSeries("q", 0, q_trunc, std::move(coefficients));
}

ProductSpec k3_product_spec(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const Rational c(-sign);
  return ProductSpec{}.times(0, -20).times(1, -2, c).times(-1, -2, c);
}

}  // namespace k3enum
