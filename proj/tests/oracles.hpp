// Independent reference computations used only by the tests. Nothing in here
// shares code paths with the library: plain maps, naive loops, generalized
// binomial series.
#ifndef K3ENUM_TESTS_ORACLES_HPP
#define K3ENUM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "k3enum/rational.hpp"

namespace k3enum::oracle {

/// Sparse polynomial in (q, y): key (q exponent, y exponent).
using BiPoly = std::map<std::pair<int, int>, Rational>;

inline Integer divisor_sum(int k, int n) {
  Integer s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) s += ipow(Integer(d), static_cast<unsigned long>(k));
  }
  return s;
}

/// Generalized binomial coefficient binom(e, j) for integer e, j >= 0.
inline Rational binom(int e, int j) {
  Rational out(1);
  for (int i = 0; i < j; ++i) out = out * Rational(e - i) / Rational(i + 1);
  return out;
}

inline BiPoly multiply(const BiPoly& a, const BiPoly& b, int q_trunc) {
  BiPoly out;
  for (const auto& [ka, va] : a) {
    for (const auto& [kb, vb] : b) {
      const int qe = ka.first + kb.first;
      if (qe >= q_trunc) continue;
      out[{qe, ka.second + kb.second}] += va * vb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// (1 - c y^a q^m)^e truncated below q^q_trunc, by the binomial series.
inline BiPoly binomial_factor(const Rational& c, int a, int m, int e, int q_trunc) {
  BiPoly out;
  Rational power(1);
  for (int j = 0; j * m < q_trunc; ++j) {
    const Rational coeff = binom(e, j) * power;
    if (!coeff.is_zero()) out[{j * m, j * a}] += coeff;
    power *= -c;
    if (e >= 0 && j >= e) break;
  }
  return out;
}

struct Family {
  int shift;
  Rational c;
  int exponent;
};

/// prod_{n>=1} prod_families (1 - c y^shift q^n)^exponent.
inline BiPoly naive_product(const std::vector<Family>& families, int q_trunc) {
  BiPoly out{{{0, 0}, Rational(1)}};
  for (const auto& f : families) {
    for (int n = 1; n < q_trunc; ++n) {
      out = multiply(out, binomial_factor(f.c, f.shift, n, f.exponent, q_trunc), q_trunc);
    }
  }
  return out;
}

/// Coefficients p_0..p_{N-1} of prod (1-q^n)^{-k}, via n p_n = k sum sigma_1(j) p_{n-j}.
inline std::vector<Rational> eta_power_recurrence(int k, int n_terms) {
  std::vector<Rational> p(static_cast<std::size_t>(n_terms));
  p[0] = Rational(1);
  for (int n = 1; n < n_terms; ++n) {
    Rational acc(0);
    for (int j = 1; j <= n; ++j) acc += Rational(divisor_sum(1, j)) * p[static_cast<std::size_t>(n - j)];
    p[static_cast<std::size_t>(n)] = Rational(k) * acc / Rational(n);
  }
  return p;
}

/// Naive dense power series helpers: index = exponent, all known below size.
using Dense = std::vector<Rational>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(std::min(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// a / b for b[0] != 0, by long division.
inline Dense dense_div(const Dense& a, const Dense& b) {
  Dense out(std::min(a.size(), b.size()), Rational(0));
  for (std::size_t n = 0; n < out.size(); ++n) {
    Rational acc = a[n];
    for (std::size_t i = 1; i <= n; ++i) acc -= b[i] * out[n - i];
    out[n] = acc / b[0];
  }
  return out;
}

/// Eisenstein series from explicit classical constants (-24, 240, -504).
inline Dense dense_eisenstein(int weight, int size) {
  const long factor = weight == 2 ? -24 : (weight == 4 ? 240 : -504);
  Dense out(static_cast<std::size_t>(size), Rational(0));
  out[0] = Rational(1);
  for (int n = 1; n < size; ++n) out[static_cast<std::size_t>(n)] = Rational(factor) * Rational(divisor_sum(weight - 1, n));
  return out;
}

/// prod (1 - q^n)^24 by repeated multiplication with (1 - q^n).
inline Dense dense_eta24(int size) {
  Dense out(static_cast<std::size_t>(size), Rational(0));
  out[0] = Rational(1);
  for (int n = 1; n < size; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int k = size - 1; k >= n; --k) out[static_cast<std::size_t>(k)] -= out[static_cast<std::size_t>(k - n)];
    }
  }
  return out;
}

/// Bernoulli numbers B_0..B_n by the Akiyama-Tanigawa algorithm (B_1 = +1/2).
inline Rational akiyama_tanigawa(int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(Integer(1), Integer(m + 1));
    for (int j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] = Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
  }
  return a[0];
}


/// Determinant by Laplace expansion along the first row.
inline Integer leibniz_det(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const Integer term = Integer(m[0][j]) * leibniz_det(minor);
    out += j % 2 == 0 ? term : Integer(-term);
  }
  return out;
}

/// Every beta in Z^n with beta^T M beta = 2h - 2 and E^T M beta = d, found by
/// scanning a box around the real solution set. The rank r = n - 1 case only:
/// the solutions lie on a line through the projection onto the image of E,
/// in the direction of the cofactor vector of E^T M.
struct BruteForceLattice {
  std::vector<std::vector<long>> gram;       // n x n
  std::vector<std::vector<long>> embedding;  // n x r
};

inline std::vector<std::vector<long>> brute_force_representations(const BruteForceLattice& lat, long h,
                                                                  const std::vector<long>& d) {
  const std::size_t n = lat.gram.size();
  const std::size_t r = n - 1;
  // A = E^T M, r x n
  std::vector<std::vector<long>> a(r, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) a[i][j] += lat.embedding[k][i] * lat.gram[k][j];
    }
  }
  // kernel of A by signed maximal minors
  std::vector<double> kernel(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long>> minor(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) minor[i].push_back(a[i][k]);
      }
    }
    const double v = leibniz_det(minor).get_d();
    kernel[j] = j % 2 == 0 ? v : -v;
  }
  // particular real solution: least-norm-free choice beta_par = E G^-1 d
  std::vector<std::vector<double>> g(r, std::vector<double>(r + 1, 0.0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < n; ++k) g[i][j] += static_cast<double>(a[i][k] * lat.embedding[k][j]);
    }
    g[i][r] = static_cast<double>(d[i]);
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    for (std::size_t i = c; i < r; ++i) {
      if (std::abs(g[i][c]) > std::abs(g[p][c])) p = i;
    }
    std::swap(g[c], g[p]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c) continue;
      const double f = g[i][c] / g[c][c];
      for (std::size_t j = c; j <= r; ++j) g[i][j] -= f * g[c][j];
    }
  }
  std::vector<double> par(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < r; ++i) par[k] += static_cast<double>(lat.embedding[k][i]) * g[i][r] / g[i][i];
  }
  auto form = [&](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s += x[i] * static_cast<double>(lat.gram[i][j]) * y[j];
    }
    return s;
  };
  const double slack = (static_cast<double>(2 * h - 2) - form(par, par)) / form(kernel, kernel);
  const double s_max = slack > 0 ? std::sqrt(slack) : 0.0;
  std::vector<long> lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double spread = s_max * std::abs(kernel[k]);
    lo[k] = static_cast<long>(std::floor(par[k] - spread)) - 1;
    hi[k] = static_cast<long>(std::ceil(par[k] + spread)) + 1;
  }
  std::vector<std::vector<long>> out;
  std::vector<long> beta(lo);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] * beta[k];
      ok = s == d[i];
    }
    if (ok) {
      long q = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) q += beta[i] * lat.gram[i][j] * beta[j];
      }
      if (q == 2 * h - 2) out.push_back(beta);
    }
    std::size_t k = 0;
    while (k < n && beta[k] == hi[k]) {
      beta[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    ++beta[k];
  }
  return out;
}

}  // namespace k3enum::oracle

#endif  // K3ENUM_TESTS_ORACLES_HPP
