#include <stdexcept>
#include <string>

#include "k3enum/modforms.hpp"

namespace k3enum {

DoubleSeries<Rational> harvey_moore_sum(const LaurentSeries& f, int order) {
  const int size = order + 1;
  DoubleSeries<Rational> s(size, size);
  for (int d = 1; d <= order; ++d) {
    for (int k = 1; k * d <= order; ++k) {
      for (int l = 1; l * d <= order; ++l) {
        s(k * d, l * d) += Rational(l * l * l) * f[k * l];
      }
    }
  }
  return s;
}

HarveyMooreInputs harvey_moore_inputs(int order) {
  if (order < 2) throw std::invalid_argument("harvey_moore: order must be >= 2");
  // S reaches c(k l) with k, l <= order.
  auto f = f_series(order * order + 1);
  auto s = harvey_moore_sum(f, order);
  return HarveyMooreInputs{order, std::move(f), eisenstein(4, order + 1).series, j_series(order + 1), std::move(s)};
}

HarveyMooreReport harvey_moore_check(const HarveyMooreInputs& in) {
  const int n = in.order;
  if (n < 2) throw std::invalid_argument("harvey_moore: order must be >= 2");
  const int size = n + 1;
  using DS = DoubleSeries<Rational>;

  const DS q1 = DS::monomial(1, 0, Rational(1), size, size);
  const DS q2 = DS::monomial(0, 1, Rational(1), size, size);
  const DS q1_f1 = DS::in_first(in.f.shifted(1), size, size);
  const DS e4_2 = DS::in_second(in.e4, size, size);
  const DS j1 = DS::in_first(in.j, size, size);
  const DS j2 = DS::in_second(in.j, size, size);
  if (in.s.rows() != size || in.s.cols() != size) throw std::invalid_argument("harvey_moore: S has the wrong shape");

  const DS lhs = q1_f1 * e4_2 * (q1 - q2) * q2;
  const DS rhs = ((q1 - q2) * (e4_2 - in.s) - q1) * (q2 * j1 - q1 * j2);

  HarveyMooreReport report;
  report.order = n;
  report.pass = true;
  for (int total = 0; total <= 2 * n && report.pass; ++total) {
    for (int i = std::max(0, total - n); i <= std::min(total, n); ++i) {
      const int j = total - i;
      if (lhs(i, j) != rhs(i, j)) {
        report.pass = false;
        report.first_discrepancy = HarveyMooreDiscrepancy{i, j, lhs(i, j), rhs(i, j)};
        break;
      }
    }
  }
  return report;
}

HarveyMooreReport harvey_moore_check(int order) { return harvey_moore_check(harvey_moore_inputs(order)); }

}  // namespace k3enum
