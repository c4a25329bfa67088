#include "k3enum/curvecounts.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "k3enum/modforms.hpp"
#include "k3enum/product.hpp"

namespace k3enum {

GenusTable::GenusTable(int g_max, int first_column, int last_column) : first_column_(first_column) {
  if (g_max < 0 || last_column < first_column - 1) throw std::invalid_argument("invalid table bounds");
  entries_ = RationalMatrix::Constant(g_max + 1, last_column - first_column + 1, Rational(0));
}

void GenusTable::check(int g, int column) const {
  if (g < 0 || g > g_max() || column < first_column_ || column > last_column()) {
    throw std::out_of_range("table entry (" + std::to_string(g) + ", " + std::to_string(column) +
                            ") outside genus 0.." + std::to_string(g_max()) + ", columns " +
                            std::to_string(first_column_) + ".." + std::to_string(last_column()));
  }
}

const Rational& GenusTable::operator()(int g, int column) const {
  check(g, column);
  return entries_(g, column - first_column_);
}

Rational& GenusTable::operator()(int g, int column) {
  check(g, column);
  return entries_(g, column - first_column_);
}

bool GenusTable::is_integral() const {
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      if (!entries_(i, j).is_integer()) return false;
    }
  }
  return true;
}

BpsTable yau_zaslow(int h_max) {
  if (h_max < 0) throw std::invalid_argument("yau_zaslow: h_max must be >= 0");
  const auto p = eta_product(-24, h_max + 1);
  BpsTable out(0, h_max);
  for (int h = 0; h <= h_max; ++h) out(0, h) = p[h];
  return out;
}

BpsTable kkv_table(int g_max, int h_max) {
  if (g_max < 0 || h_max < 0) throw std::invalid_argument("kkv_table: bounds must be >= 0");
  const auto z = product_expand(k3_product_spec(-1), h_max + 1, "z");
  BpsTable out(g_max, h_max);
  for (int h = 0; h <= h_max; ++h) {
    WPolynomial c;
    try {
      c = symmetric_to_w(z.slice(h), WBasis::Minus);
    } catch (const std::invalid_argument& e) {
      throw std::logic_error("kkv_table: asymmetric slice at q^" + std::to_string(h) + ": " + e.what());
    }
    for (int g = 0; g <= g_max && g < static_cast<int>(c.size()); ++g) {
      const Rational r = g % 2 == 0 ? c[static_cast<std::size_t>(g)] : -c[static_cast<std::size_t>(g)];
      if (!r.is_integer()) {
        throw std::logic_error("kkv_table: non-integral r(" + std::to_string(g) + "," + std::to_string(h) + ")");
      }
      out(g, h) = r;
    }
  }
  return out;
}

LaurentSeries bryan_leung(int genus, int q_trunc) {
  if (genus < 0) throw std::invalid_argument("bryan_leung: genus must be >= 0");
  if (q_trunc < 0) throw std::invalid_argument("bryan_leung: q_trunc must be >= 0");
  const LaurentSeries inverse_eta24 = eta_product(-24, q_trunc + 1).shifted(-1);
  if (genus == 0) return inverse_eta24;
  const LaurentSeries point = q_derivative(eisenstein(2, q_trunc + 1).series).scaled(Rational(Integer(-1), Integer(24)));
  return (inverse_eta24 * pow(point, genus)).truncated(q_trunc);
}

PairsEulerTable::PairsEulerTable(int h_max, int n_max) : n_max_(n_max) {
  if (h_max < 0) throw std::invalid_argument("pairs table: h_max must be >= 0");
  if (n_max < 1) throw std::invalid_argument("pairs table: n_max must be >= 1");
  rows_.resize(static_cast<std::size_t>(h_max + 1));
  for (int h = 0; h <= h_max; ++h) rows_[static_cast<std::size_t>(h)].assign(static_cast<std::size_t>(n_max + h), Integer(0));
}

Integer PairsEulerTable::at(int n, int h) const {
  if (h < 0 || h > h_max() || n > n_max_) {
    throw std::out_of_range("e(P_" + std::to_string(n) + "(S," + std::to_string(h) + ")) outside the window");
  }
  if (n < 1 - h) return Integer(0);
  return rows_[static_cast<std::size_t>(h)][static_cast<std::size_t>(n - (1 - h))];
}

void PairsEulerTable::set(int n, int h, Integer value) {
  if (h < 0 || h > h_max() || n > n_max_ || n < 1 - h) {
    throw std::out_of_range("e(P_" + std::to_string(n) + "(S," + std::to_string(h) + ")) outside the window");
  }
  rows_[static_cast<std::size_t>(h)][static_cast<std::size_t>(n - (1 - h))] = std::move(value);
}

PairsEulerTable kawai_yoshioka(int h_max, int n_max) {
  PairsEulerTable out(h_max, n_max);
  const auto y = product_expand(k3_product_spec(-1), h_max + 1, "y");
  for (int h = 0; h <= h_max; ++h) {
    const LaurentPoly& p = y.slice(h);
    for (int n = 1 - h; n <= n_max; ++n) {
      // y / (1 - y)^2 = sum_{m >= 1} m y^m
      Rational e(0);
      for (int j = p.min_exponent(); j <= p.max_exponent() && n - j >= 1; ++j) e += p[j] * Rational(n - j);
      out.set(n, h, e.to_integer());
    }
  }
  return out;
}

WPolynomial pairs_partition_w(int h, int q_trunc) {
  if (h < 0 || h >= q_trunc) {
    throw std::out_of_range("pairs_partition_w: h = " + std::to_string(h) + " outside [0, " + std::to_string(q_trunc) + ")");
  }
  const auto y = product_expand(k3_product_spec(+1), q_trunc, "y");
  return symmetric_to_w(y.slice(h), WBasis::Plus);
}

WPolynomial gw_partition_w(int h, const BpsTable& table) {
  if (h < 0 || h > table.h_max() || table.g_max() < h) {
    throw std::invalid_argument("gw_partition_w: table must cover genus 0.." + std::to_string(h) + " at h = " +
                                std::to_string(h));
  }
  WPolynomial out;
  for (int g = 0; g <= table.g_max(); ++g) out.push_back(table(g, h));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

LaurentPoly signed_pairs_series(const PairsEulerTable& table, int h) {
  std::vector<Rational> c;
  for (int n = 1 - h; n <= table.n_max(); ++n) {
    const Rational e(table.at(n, h));
    c.push_back((n - 1) % 2 == 0 ? e : -e);
  }
  return LaurentPoly(1 - h, std::move(c));
}

std::optional<int> kawai_yoshioka_reassembly_mismatch(const PairsEulerTable& table) {
  const auto plus = product_expand(k3_product_spec(+1), table.h_max() + 1, "y");
  const LaurentPoly w = w_generator(WBasis::Plus);
  for (int h = 0; h <= table.h_max(); ++h) {
    const LaurentPoly lhs = w * signed_pairs_series(table, h);
    for (int k = -h; k <= table.n_max() - 1; ++k) {
      if (lhs[k] != plus.slice(h)[k]) return h;
    }
  }
  return std::nullopt;
}

CorrespondenceReport gw_pairs_check(const BpsTable& table) {
  const int h_max = table.h_max();
  if (table.g_max() < h_max) throw std::invalid_argument("gw_pairs_check: table needs g_max >= h_max");
  CorrespondenceReport report;
  report.h_max = h_max;
  report.pass = true;
  const auto y = product_expand(k3_product_spec(+1), h_max + 1, "y");
  for (int h = 0; h <= h_max; ++h) {
    auto gw = gw_partition_w(h, table);
    auto pairs = symmetric_to_w(y.slice(h), WBasis::Plus);
    if (gw != pairs) {
      report.pass = false;
      report.first_mismatch = h;
      report.gw_side = std::move(gw);
      report.pairs_side = std::move(pairs);
      break;
    }
  }
  return report;
}

CorrespondenceReport gw_pairs_check(int h_max) {
  if (h_max < 0) throw std::invalid_argument("gw_pairs_check: h_max must be >= 0");
  return gw_pairs_check(kkv_table(h_max, h_max));
}

LaurentSeries sine_kernel(int genus, int d, int u_trunc) {
  if (genus < 0 || d < 1) throw std::invalid_argument("sine_kernel: need genus >= 0 and d >= 1");
  // 2 sin(d u / 2) = sum_j (-1)^j (d u)^(2j+1) / (4^j (2j+1)!), relative precision u_trunc + 2.
  const int t = u_trunc + 3;
  std::vector<Rational> c(static_cast<std::size_t>(t), Rational(0));
  Rational term(d);  // (d)^(2j+1) / (4^j (2j+1)!) with sign
  for (int m = 1; m < t; m += 2) {
    c[static_cast<std::size_t>(m)] = term;
    term = -term * Rational(d * d) / Rational(4L * (m + 1) * (m + 2));
  }
  const LaurentSeries s("u", 0, t, std::move(c));
  return pow(s, 2L * genus - 2).truncated(u_trunc);
}

namespace {

class KernelCache {
 public:
  explicit KernelCache(int u_trunc) : u_trunc_(u_trunc) {}

  // [u^(2g-2)] (2 sin(d u/2))^(2 g' - 2)
  Rational coefficient(int g_source, int d, int g_target) {
    auto key = std::make_pair(g_source, d);
    auto it = kernels_.find(key);
    if (it == kernels_.end()) it = kernels_.emplace(key, sine_kernel(g_source, d, u_trunc_)).first;
    return it->second[2 * g_target - 2];
  }

 private:
  int u_trunc_;
  std::map<std::pair<int, int>, LaurentSeries> kernels_;
};

// Contribution of every (d, g') to R_{g,k} except d = 1, g' = g.
Rational cover_sum(const GenusTable& bps, int g, int k, KernelCache& kernels) {
  Rational out(0);
  for (int d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    const Rational inv_d(Integer(1), Integer(d));
    for (int gs = 0; gs <= g; ++gs) {
      if (d == 1 && gs == g) continue;
      const Rational& r = bps(gs, k / d);
      if (r.is_zero()) continue;
      out += inv_d * r * kernels.coefficient(gs, d, g);
    }
  }
  return out;
}

}  // namespace

GwPotentialTable gv_forward(const DivisibleBpsTable& bps, int g_max, int k_max, int u_trunc) {
  if (g_max < 0 || k_max < 0) throw std::invalid_argument("gv_forward: bounds must be >= 0");
  if (u_trunc < 2 * g_max) throw std::invalid_argument("gv_forward: u_trunc must be >= 2 g_max");
  if (bps.g_max() < g_max || bps.k_max() < k_max) throw std::invalid_argument("gv_forward: table does not cover the window");
  KernelCache kernels(u_trunc);
  GwPotentialTable out(g_max, k_max);
  for (int k = 1; k <= k_max; ++k) {
    for (int g = 0; g <= g_max; ++g) out(g, k) = bps(g, k) + cover_sum(bps, g, k, kernels);
  }
  return out;
}

GwPotentialTable gv_forward(const DivisibleBpsTable& bps) {
  return gv_forward(bps, bps.g_max(), bps.k_max(), 2 * bps.g_max());
}

DivisibleBpsTable gv_invert(const GwPotentialTable& gw) {
  const int g_max = gw.g_max();
  const int k_max = gw.k_max();
  KernelCache kernels(2 * g_max);
  DivisibleBpsTable out(g_max, k_max);
  for (int k = 1; k <= k_max; ++k) {
    for (int g = 0; g <= g_max; ++g) out(g, k) = gw(g, k) - cover_sum(out, g, k, kernels);
  }
  return out;
}

}  // namespace k3enum
