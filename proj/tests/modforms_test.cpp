#include <random>

#include <gtest/gtest.h>

#include "k3enum/modforms.hpp"
#include "k3enum/product.hpp"
#include "oracles.hpp"

namespace k3enum {
namespace {

Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

TEST(BernoulliTest, Examples) {
  EXPECT_EQ(bernoulli(2), frac(1, 6));
  EXPECT_EQ(bernoulli(4), frac(-1, 30));
  EXPECT_EQ(bernoulli(12), frac(-691, 2730));
  EXPECT_THROW(bernoulli(3), std::invalid_argument);
  EXPECT_THROW(bernoulli(0), std::invalid_argument);
}

TEST(BernoulliTest, MatchesAkiyamaTanigawa) {
  for (int n = 2; n <= 40; n += 2) EXPECT_EQ(bernoulli(n), oracle::akiyama_tanigawa(n)) << n;
}

TEST(SigmaTest, Examples) {
  EXPECT_EQ(divisor_sigma(1, 1), 1);
  EXPECT_EQ(divisor_sigma(1, 6), 12);
  EXPECT_EQ(divisor_sigma(3, 4), 73);
  EXPECT_EQ(divisor_sigma(0, 12), 6);
  EXPECT_THROW(divisor_sigma(1, 0), std::invalid_argument);
  for (int n = 1; n < 60; ++n) EXPECT_EQ(divisor_sigma(5, n), oracle::divisor_sum(5, n));
}

TEST(EisensteinTest, FirstCoefficients) {
  EXPECT_EQ(eisenstein(2, 5).series[1], Rational(-24));
  EXPECT_EQ(eisenstein(4, 5).series[1], Rational(240));
  EXPECT_EQ(eisenstein(6, 5).series[1], Rational(-504));
  EXPECT_EQ(eisenstein(4, 5).series[0], Rational(1));
  EXPECT_EQ(eisenstein(12, 3).series[1], frac(65520, 691));
  EXPECT_THROW(eisenstein(3, 5), std::invalid_argument);
  EXPECT_THROW(eisenstein(0, 5), std::invalid_argument);
}

TEST(EisensteinTest, MatchesDivisorSumFormula) {
  for (int w : {2, 4, 6}) {
    const auto e = eisenstein(w, 30).series;
    const auto expected = oracle::dense_eisenstein(w, 30);
    for (int n = 0; n < 30; ++n) EXPECT_EQ(e[n], expected[static_cast<std::size_t>(n)]);
  }
}

TEST(EisensteinTest, QDerivativeOfE2) {
  const auto d = q_derivative(eisenstein(2, 5).series);
  EXPECT_EQ(d[1], Rational(-24));
  EXPECT_EQ(d[2], Rational(-144));
  EXPECT_EQ(d[3], Rational(-288));
}

TEST(DeltaTest, Coefficients) {
  const auto delta = delta_series(40);
  EXPECT_EQ(delta.min_exponent(), 1);
  EXPECT_EQ(delta[1], Rational(1));
  EXPECT_EQ(delta[2], Rational(-24));
  EXPECT_EQ(delta[3], Rational(252));
  EXPECT_EQ(delta[4], Rational(-1472));
  const auto naive = oracle::dense_eta24(39);
  for (int n = 1; n < 40; ++n) {
    EXPECT_EQ(delta[n], naive[static_cast<std::size_t>(n - 1)]);
    EXPECT_TRUE(delta[n].is_integer());
  }
  EXPECT_THROW(delta_series(1), std::invalid_argument);
}

TEST(JTest, Coefficients) {
  const auto j = j_series(30);
  EXPECT_EQ(j[0], Rational(1));
  EXPECT_EQ(j[1], Rational(744));
  EXPECT_EQ(j[2], Rational(196884));
  EXPECT_EQ(j[3], Rational(21493760));
  const auto e4 = oracle::dense_eisenstein(4, 30);
  const auto expected = oracle::dense_div(oracle::dense_mul(oracle::dense_mul(e4, e4), e4), oracle::dense_eta24(30));
  for (int n = 0; n < 30; ++n) EXPECT_EQ(j[n], expected[static_cast<std::size_t>(n)]);
}

TEST(FTest, Coefficients) {
  const auto f = f_series(40);
  EXPECT_EQ(f.min_exponent(), -1);
  EXPECT_EQ(f.truncation(), 40);
  EXPECT_EQ(f[-1], Rational(1));
  EXPECT_EQ(f[0], Rational(-240));
  EXPECT_EQ(f[1], Rational(-141444));
  const auto expected = oracle::dense_div(
      oracle::dense_mul(oracle::dense_eisenstein(4, 41), oracle::dense_eisenstein(6, 41)), oracle::dense_eta24(41));
  for (int n = -1; n < 40; ++n) {
    EXPECT_EQ(f[n], expected[static_cast<std::size_t>(n + 1)]);
    EXPECT_TRUE(f[n].is_integer());
  }
}

TEST(ModularIdentityTest, DiscriminantIdentity) {
  const int t = 60;
  const auto e4 = eisenstein(4, t).series;
  const auto e6 = eisenstein(6, t).series;
  EXPECT_EQ(pow(e4, 3) - pow(e6, 2), delta_series(t).scaled(Rational(1728)));
}

TEST(ModularIdentityTest, RamanujanDerivatives) {
  const int t = 60;
  const auto e2 = eisenstein(2, t).series;
  const auto e4 = eisenstein(4, t).series;
  const auto e6 = eisenstein(6, t).series;
  EXPECT_EQ(q_derivative(e2), (e2 * e2 - e4).scaled(frac(1, 12)));
  EXPECT_EQ(q_derivative(e4), (e2 * e4 - e6).scaled(frac(1, 3)));
  EXPECT_EQ(q_derivative(e6), (e2 * e6 - e4 * e4).scaled(frac(1, 2)));
}

TEST(QuasimodularTest, BasisSizes) {
  EXPECT_EQ(quasimodular_basis(0).size(), 1u);
  EXPECT_EQ(quasimodular_basis(2).size(), 1u);
  EXPECT_EQ(quasimodular_basis(4).size(), 2u);
  EXPECT_EQ(quasimodular_basis(12).size(), 7u);
  EXPECT_EQ(quasimodular_basis(16).size(), 10u);
  for (const auto& m : quasimodular_basis(24)) EXPECT_EQ(m.weight(), 24);
}

TEST(QuasimodularTest, RecoversRamanujanIdentity) {
  const auto s = q_derivative(eisenstein(2, 22).series);
  const auto d = quasimodular_recognize(s, 4);
  ASSERT_TRUE(d.has_value());
  ASSERT_EQ(d->monomials.size(), 2u);
  EXPECT_EQ(d->monomials[0], (EisensteinMonomial{2, 0, 0}));
  EXPECT_EQ(d->coefficients[0], frac(1, 12));
  EXPECT_EQ(d->monomials[1], (EisensteinMonomial{0, 1, 0}));
  EXPECT_EQ(d->coefficients[1], frac(-1, 12));
  EXPECT_EQ(d->surplus_checked, 20);
}

TEST(QuasimodularTest, E4IsItself) {
  const auto d = quasimodular_recognize(eisenstein(4, 15).series, 4);
  ASSERT_TRUE(d.has_value());
  ASSERT_EQ(d->monomials.size(), 1u);
  EXPECT_EQ(d->monomials[0], (EisensteinMonomial{0, 1, 0}));
  EXPECT_EQ(d->coefficients[0], Rational(1));
}

TEST(QuasimodularTest, RejectsNonQuasimodularInput) {
  const auto s = eisenstein(4, 20).series + LaurentSeries::monomial("q", 5, Rational(1), 20);
  EXPECT_FALSE(quasimodular_recognize(s, 4).has_value());
  EXPECT_FALSE(quasimodular_recognize(eisenstein(4, 20).series, 6).has_value());
}

TEST(QuasimodularTest, Errors) {
  EXPECT_THROW(quasimodular_recognize(eisenstein(4, 11).series, 4), std::invalid_argument);
  EXPECT_THROW(quasimodular_recognize(f_series(20), 4), std::invalid_argument);
  EXPECT_THROW(quasimodular_recognize(eisenstein(4, 20).series, 3), std::invalid_argument);
}

TEST(QuasimodularTest, RandomDecompositionsRoundTrip) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> weight_pick(0, 8);
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::uniform_int_distribution<int> den(1, 6);
  for (int trial = 0; trial < 25; ++trial) {
    QuasimodularDecomposition d;
    d.weight = 2 * weight_pick(rng);
    for (const auto& m : quasimodular_basis(d.weight)) {
      const int c = coeff(rng);
      if (c == 0) continue;
      d.monomials.push_back(m);
      d.coefficients.emplace_back(Integer(c), Integer(den(rng)));
    }
    const int t = static_cast<int>(quasimodular_basis(d.weight).size()) + kRecognitionSurplus + 3;
    const auto r = quasimodular_recognize(expand(d, t), d.weight);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->monomials, d.monomials);
    EXPECT_EQ(r->coefficients, d.coefficients);
  }
}

// Both sides of the cleared Harvey-Moore identity by naive sparse
// multiplication from independently computed coefficients.
oracle::BiPoly naive_side(int n, bool left) {
  const int size = n + 1;
  const auto e4 = oracle::dense_eisenstein(4, size + 1);
  const auto eta = oracle::dense_eta24(n * n + 3);
  const auto f_shift = oracle::dense_div(
      oracle::dense_mul(oracle::dense_eisenstein(4, n * n + 3), oracle::dense_eisenstein(6, n * n + 3)), eta);
  // f_shift[m] = c(m - 1)
  const auto j = oracle::dense_div(oracle::dense_mul(oracle::dense_mul(e4, e4), e4), oracle::dense_eta24(size + 1));
  auto trunc = [&](oracle::BiPoly p) {
    std::erase_if(p, [&](const auto& kv) { return kv.first.first > n || kv.first.second > n; });
    return p;
  };
  auto mul = [&](const oracle::BiPoly& a, const oracle::BiPoly& b) { return trunc(oracle::multiply(a, b, size)); };
  auto add = [](oracle::BiPoly a, const oracle::BiPoly& b, long sign) {
    for (const auto& [k, v] : b) a[k] += Rational(sign) * v;
    return a;
  };
  oracle::BiPoly q1{{{1, 0}, Rational(1)}}, q2{{{0, 1}, Rational(1)}};
  oracle::BiPoly q1f1, e4_2, j1, j2, s;
  for (int i = 0; i <= n; ++i) {
    q1f1[{i, 0}] = f_shift[static_cast<std::size_t>(i)];
    e4_2[{0, i}] = e4[static_cast<std::size_t>(i)];
    j1[{i, 0}] = j[static_cast<std::size_t>(i)];
    j2[{0, i}] = j[static_cast<std::size_t>(i)];
  }
  for (int d = 1; d <= n; ++d) {
    for (int k = 1; k * d <= n; ++k) {
      for (int l = 1; l * d <= n; ++l) s[{k * d, l * d}] += Rational(l * l * l) * f_shift[static_cast<std::size_t>(k * l + 1)];
    }
  }
  const auto diff = add(q1, q2, -1);
  if (left) return mul(mul(mul(q1f1, e4_2), diff), q2);
  const auto bracket = add(mul(diff, add(e4_2, s, -1)), q1, -1);
  return mul(bracket, add(mul(q2, j1), mul(q1, j2), -1));
}

TEST(HarveyMooreTest, IdentityHoldsByIndependentExpansion) {
  for (int n : {2, 5}) {
    auto lhs = naive_side(n, true);
    auto rhs = naive_side(n, false);
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    EXPECT_EQ(lhs, rhs) << "order " << n;
  }
}

TEST(HarveyMooreTest, PassesAtSmallOrder) {
  const auto report = harvey_moore_check(2);
  EXPECT_TRUE(report.pass);
  EXPECT_FALSE(report.first_discrepancy.has_value());
  EXPECT_THROW(harvey_moore_check(1), std::invalid_argument);
}

TEST(HarveyMooreTest, SumLeadingTerm) {
  const auto s = harvey_moore_sum(f_series(17), 4);
  EXPECT_EQ(s(1, 1), Rational(-141444));
  EXPECT_EQ(s(0, 0), Rational(0));
  // (2, 2): d = 2, k = l = 1 plus d = 1, k = l = 2.
  const auto f = f_series(17);
  EXPECT_EQ(s(2, 2), f[1] + Rational(8) * f[4]);
}

TEST(HarveyMooreTest, PerturbedCoefficientFails) {
  auto in = harvey_moore_inputs(4);
  std::vector<Rational> c(in.f.coefficients().begin(), in.f.coefficients().end());
  c[2] += Rational(1);  // c(1)
  in.f = LaurentSeries("q", in.f.min_exponent(), in.f.truncation(), c);
  in.s = harvey_moore_sum(in.f, 4);
  const auto report = harvey_moore_check(in);
  EXPECT_FALSE(report.pass);
  ASSERT_TRUE(report.first_discrepancy.has_value());
  EXPECT_NE(report.first_discrepancy->lhs, report.first_discrepancy->rhs);
}

LaurentSeries bumped(const LaurentSeries& s, int exponent) {
  std::vector<Rational> c;
  for (int n = s.min_exponent(); n < s.truncation(); ++n) c.push_back(n == exponent ? s[n] + Rational(1) : s[n]);
  return LaurentSeries(s.variable(), s.min_exponent(), s.truncation(), std::move(c));
}

TEST(HarveyMooreTest, EverySingleMutationIsDetected) {
  const int n = 5;
  const auto base = harvey_moore_inputs(n);
  ASSERT_TRUE(harvey_moore_check(base).pass);
  for (int e = -1; e <= n - 2; ++e) {
    auto in = base;
    in.f = bumped(in.f, e);
    EXPECT_FALSE(harvey_moore_check(in).pass) << "f at q^" << e;
  }
  for (int e = 0; e <= n; ++e) {
    if (e == 1) continue;
    auto in = base;
    in.j = bumped(in.j, e);
    EXPECT_FALSE(harvey_moore_check(in).pass) << "J at q^" << e;
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= 2 * n - 2 && j <= n; ++j) {
      auto in = base;
      in.s(i, j) += Rational(1);
      EXPECT_FALSE(harvey_moore_check(in).pass) << "S at " << i << "," << j;
    }
  }
}

TEST(HarveyMooreTest, LinearJCoefficientCancels) {
  auto in = harvey_moore_inputs(4);
  in.j = bumped(in.j, 1);
  EXPECT_TRUE(harvey_moore_check(in).pass);
}

TEST(HarveyMooreTest, PassesUpToOrderTwelve) {
  for (int n = 2; n <= 12; ++n) EXPECT_TRUE(harvey_moore_check(n).pass) << n;
}

}  // namespace
}  // namespace k3enum
