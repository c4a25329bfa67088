#include "k3enum/modforms.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "k3enum/linalg.hpp"
#include "k3enum/product.hpp"

namespace k3enum {

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// sigma_k(n) for 1 <= n < limit, by sieving.
std::vector<Integer> sigma_table(int k, int limit) {
  std::vector<Integer> out(static_cast<std::size_t>(std::max(limit, 1)), Integer(0));
  for (int d = 1; d < limit; ++d) {
    const Integer dk = ipow(Integer(d), static_cast<unsigned long>(k));
    for (int m = d; m < limit; m += d) out[static_cast<std::size_t>(m)] += dk;
  }
  return out;
}

void require_order(int q_trunc, int minimum, const char* what) {
  if (q_trunc < minimum) {
    throw std::invalid_argument(std::string(what) + " needs q_trunc >= " + std::to_string(minimum));
  }
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("bernoulli: index must be even and >= 2");
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0.
  while (static_cast<int>(cache.size()) <= n) {
    const auto m = static_cast<unsigned long>(cache.size());
    Rational acc(0);
    for (unsigned long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return cache[static_cast<std::size_t>(n)];
}

Integer divisor_sigma(int k, int n) {
  if (n < 1) throw std::invalid_argument("divisor_sigma: n must be >= 1");
  if (k < 0) throw std::invalid_argument("divisor_sigma: k must be >= 0");
  Integer out = 0;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out += ipow(Integer(d), static_cast<unsigned long>(k));
    if (d * d != n) out += ipow(Integer(n / d), static_cast<unsigned long>(k));
  }
  return out;
}

EisensteinSeries eisenstein(int weight, int q_trunc) {
  if (weight < 2 || weight % 2 != 0) {
    throw std::invalid_argument("eisenstein: weight must be even and >= 2, got " + std::to_string(weight));
  }
  require_order(q_trunc, 1, "eisenstein");
  const Rational factor = Rational(-2 * weight) / bernoulli(weight);
  const auto sigma = sigma_table(weight - 1, q_trunc);
  std::vector<Rational> c(static_cast<std::size_t>(q_trunc));
  c[0] = Rational(1);
  for (int n = 1; n < q_trunc; ++n) c[static_cast<std::size_t>(n)] = factor * Rational(sigma[static_cast<std::size_t>(n)]);
  return {weight, LaurentSeries("q", 0, q_trunc, std::move(c))};
}

LaurentSeries delta_series(int q_trunc) {
  require_order(q_trunc, 2, "delta_series");
  return eta_product(24, q_trunc - 1).shifted(1);
}

LaurentSeries j_series(int q_trunc) {
  require_order(q_trunc, 2, "j_series");
  const auto e4 = eisenstein(4, q_trunc).series;
  return pow(e4, 3) * inverse(eta_product(24, q_trunc));
}

LaurentSeries f_series(int q_trunc) {
  require_order(q_trunc, 1, "f_series");
  const auto e4 = eisenstein(4, q_trunc + 1).series;
  const auto e6 = eisenstein(6, q_trunc + 1).series;
  return (e4 * e6 * inverse(eta_product(24, q_trunc + 1))).shifted(-1);
}

std::vector<EisensteinMonomial> quasimodular_basis(int weight) {
  if (weight < 0 || weight % 2 != 0) throw std::invalid_argument("quasimodular weight must be even and >= 0");
  std::vector<EisensteinMonomial> out;
  for (int a = weight / 2; a >= 0; --a) {
    const int rest = weight - 2 * a;
    for (int b = rest / 4; b >= 0; --b) {
      if ((rest - 4 * b) % 6 == 0) out.push_back({a, b, (rest - 4 * b) / 6});
    }
  }
  return out;
}

namespace {

// E2^a E4^b E6^c, memoized per call site.
class MonomialExpander {
 public:
  explicit MonomialExpander(int q_trunc)
      : q_trunc_(q_trunc),
        e2_(eisenstein(2, q_trunc).series),
        e4_(eisenstein(4, q_trunc).series),
        e6_(eisenstein(6, q_trunc).series) {}

  LaurentSeries operator()(const EisensteinMonomial& m) {
    const auto key = std::make_tuple(m.e2, m.e4, m.e6);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    LaurentSeries out = LaurentSeries::one("q", q_trunc_);
    out = out * power(e2_, m.e2, powers2_) * power(e4_, m.e4, powers4_) * power(e6_, m.e6, powers6_);
    cache_.emplace(key, out);
    return out;
  }

 private:
  LaurentSeries power(const LaurentSeries& base, int k, std::vector<LaurentSeries>& powers) {
    if (powers.empty()) powers.push_back(LaurentSeries::one("q", q_trunc_));
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * base);
    return powers[static_cast<std::size_t>(k)];
  }

  int q_trunc_;
  LaurentSeries e2_, e4_, e6_;
  std::vector<LaurentSeries> powers2_, powers4_, powers6_;
  std::map<std::tuple<int, int, int>, LaurentSeries> cache_;
};

}  // namespace

LaurentSeries expand(const QuasimodularDecomposition& d, int q_trunc) {
  if (d.monomials.size() != d.coefficients.size()) throw std::invalid_argument("malformed decomposition");
  MonomialExpander expander(q_trunc);
  LaurentSeries out = LaurentSeries::zero("q", q_trunc);
  for (std::size_t i = 0; i < d.monomials.size(); ++i) {
    if (d.monomials[i].weight() != d.weight) throw std::invalid_argument("monomial weight mismatch");
    out = out + expander(d.monomials[i]).scaled(d.coefficients[i]);
  }
  return out;
}

std::optional<QuasimodularDecomposition> quasimodular_recognize(const LaurentSeries& s, int weight) {
  if (s.valuation() < 0) throw std::invalid_argument("quasimodular_recognize expects a power series");
  const auto basis = quasimodular_basis(weight);
  const int known = s.truncation();
  const int needed = static_cast<int>(basis.size()) + kRecognitionSurplus;
  if (known < needed) {
    throw std::invalid_argument("insufficient truncation: weight " + std::to_string(weight) + " needs " +
                                std::to_string(needed) + " coefficients, have " + std::to_string(known));
  }
  MonomialExpander expander(known);
  RationalMatrix a(known, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const LaurentSeries m = expander(basis[col]);
    for (int n = 0; n < known; ++n) a(n, static_cast<Eigen::Index>(col)) = m[n];
  }
  RationalVector b(known);
  for (int n = 0; n < known; ++n) b(n) = s[n];
  const LinearSolve solution = solve(a, b);
  if (!solution.consistent) return std::nullopt;
  if (solution.rank < static_cast<int>(basis.size())) {
    throw std::invalid_argument("insufficient truncation: known coefficients do not determine the decomposition");
  }
  QuasimodularDecomposition out;
  out.weight = weight;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Rational& c = (*solution.solution)(static_cast<Eigen::Index>(col));
    if (c.is_zero()) continue;
    out.monomials.push_back(basis[col]);
    out.coefficients.push_back(c);
  }
  out.surplus_checked = known - solution.rank;
  return out;
}

}  // namespace k3enum
