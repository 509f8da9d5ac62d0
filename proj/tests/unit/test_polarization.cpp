#include <gtest/gtest.h>

#include <cmath>

#include "bspec/cheb_markov.hpp"
#include "bspec/errors.hpp"
#include "bspec/polarization.hpp"
#include "bspec/random.hpp"
#include "bspec/witness_search.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

std::vector<double> random_point(Rng& rng, int n) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform(-1.0, 1.0);
  return x;
}

std::vector<double> vertex(Mask row, int n) {
  const auto p = oracle::point(row, n);
  return {p.begin(), p.end()};
}

/// L(x^m, y^(d-m)) summed monomial by monomial from slot placements.
double placement_value(const FourierSpectrum& s, int d, int m, const std::vector<double>& x,
                       const std::vector<double>& y) {
  double total = 0.0;
  for (const auto& c : s.coefficients()) total += c.value * oracle::two_block_by_placements(c.mask, d, m, x, y);
  return total;
}

}  // namespace

TEST(EvalReal, VerticesAndOrigin) {
  const auto s = random_spectrum(4, 3, 12);
  const TetrahedralPoly q(s);
  const auto f = inverse_transform(s);
  for (Mask r = 0; r < 16; ++r) EXPECT_NEAR(eval_real(q, vertex(r, 4)), f[r], 1e-12);
  EXPECT_EQ(eval_real(q, std::vector<double>(4, 0.0)), s.coefficient(0));
  EXPECT_THROW(eval_real(q, std::vector<double>{1.0, 0.0, 0.0, 1.5}), DomainError);
  EXPECT_THROW(eval_real(q, std::vector<double>{1.0, 0.0}), DomainError);
}

TEST(EvalReal, ProductMeanIdentity) {
  // E[Q(X)] = Q(E[X]) for independent coordinates, by exhaustive expectation.
  Rng rng(6);
  const int n = 4;
  const auto s = random_spectrum(n, 4, 77);
  const TetrahedralPoly q(s);
  std::vector<double> prob(n);
  for (double& p : prob) p = rng.uniform(0.0, 1.0);  // P(x_i = -1)
  double expect = 0.0;
  std::vector<double> mean(n);
  for (int i = 0; i < n; ++i) mean[i] = 1.0 - 2.0 * prob[i];
  for (Mask r = 0; r < 16; ++r) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) w *= ((r >> i) & 1u) ? prob[i] : 1.0 - prob[i];
    expect += w * eval_real(q, vertex(r, n));
  }
  EXPECT_NEAR(eval_real(q, mean), expect, 1e-12);
}

TEST(ClassSize, Examples) {
  EXPECT_TRUE(class_size(std::vector<int>{1, 2, 3, 4}) == 24);
  EXPECT_TRUE(class_size(std::vector<int>{3, 3, 3}) == 1);
  EXPECT_TRUE(class_size(std::vector<int>{0, 0, 1, 2}) == 12);
}

TEST(Weights, Table) {
  const auto w0 = two_block_weights(0, 4);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(w0.w[k][0], Rational(1, 1));
    for (int j = 1; j <= k; ++j) EXPECT_EQ(w0.w[k][j], Rational(0, 1));
  }
  const auto wd = two_block_weights(4, 4);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(wd.w[k][k], Rational(1, 1));
  EXPECT_EQ(two_block_weights(1, 3).w[2][1], Rational(1, 3));
  EXPECT_THROW(two_block_weights(5, 4), DomainError);

  for (int d = 0; d <= 12; ++d)
    for (int m = 0; m <= d; ++m) {
      const auto w = two_block_weights(m, d);
      const auto mirror = two_block_weights(d - m, d);
      for (int k = 0; k <= d; ++k) {
        Rational total;
        for (int j = 0; j <= k; ++j) {
          total = total + w.w[k][j] * Rational(binomial(k, j), 1);
          EXPECT_EQ(w.w[k][j], mirror.w[k][k - j]);
        }
        EXPECT_EQ(total, Rational(1, 1)) << d << " " << m << " " << k;
      }
    }
}

TEST(TwoBlockEval, AgreesWithPlacementAverage) {
  Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 5;
    const int deg = rng.uniform_int(0, n);
    const auto s = random_spectrum(n, deg, rng.engine()());
    const TetrahedralPoly q(s);
    const int d = std::max(q.degree(), rng.uniform_int(q.degree(), 5));
    const int m = rng.uniform_int(0, d);
    const auto x = random_point(rng, n), y = random_point(rng, n);
    const double fast = two_block_eval(q, two_block_weights(m, d), x, y);
    ASSERT_NEAR(fast, placement_value(s, d, m, x, y), 1e-12);
  }
}

TEST(TwoBlockEval, OracleEquivalence) {
  Rng rng(22);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 5;
    const int deg = rng.uniform_int(0, std::min(n, 5));
    const auto s = random_spectrum(n, deg, rng.engine()());
    const TetrahedralPoly q(s);
    const int d = q.degree();
    const int m = rng.uniform_int(0, d);
    const auto x = random_point(rng, n), y = random_point(rng, n);
    const double fast = two_block_eval(q, two_block_weights(m, d), x, y);
    worst = std::max(worst, std::abs(fast - two_block_oracle(q, m, x, y)));
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(TwoBlockEval, OracleWithLargerArity) {
  Rng rng(23);
  const auto s = random_spectrum(4, 2, 5);
  const TetrahedralPoly q(s);
  for (int d = 2; d <= 6; ++d)
    for (int m = 0; m <= d; ++m) {
      const auto x = random_point(rng, 4), y = random_point(rng, 4);
      EXPECT_NEAR(two_block_eval(q, two_block_weights(m, d), x, y), two_block_oracle(q, m, d, x, y), 1e-10);
    }
}

TEST(TwoBlockEval, DiagonalSingleMonomialAndConstants) {
  Rng rng(24);
  const auto s = random_spectrum(5, 4, 8);
  const TetrahedralPoly q(s);
  for (int m = 0; m <= 4; ++m) {
    const auto x = random_point(rng, 5);
    EXPECT_NEAR(two_block_eval(q, two_block_weights(m, 4), x, x), eval_real(q, x), 1e-12);
  }
  const FourierSpectrum mono(3, {{0b111, 1.0}});
  const TetrahedralPoly qm(mono);
  const auto x = random_point(rng, 3), y = random_point(rng, 3);
  EXPECT_NEAR(two_block_eval(qm, two_block_weights(3, 3), x, y), x[0] * x[1] * x[2], 1e-15);
  EXPECT_NEAR(two_block_oracle(qm, 3, x, x), x[0] * x[1] * x[2], 1e-12);

  const FourierSpectrum c(3, {{0, 2.5}});
  EXPECT_NEAR(two_block_oracle(TetrahedralPoly(c), 0, x, y), 2.5, 1e-15);
  EXPECT_THROW(two_block_eval(q, two_block_weights(1, 3), x, y), DomainError);
}

TEST(TwoBlockEval, SwapSymmetryAndMultiaffinity) {
  Rng rng(25);
  const auto s = random_spectrum(5, 4, 30);
  const TetrahedralPoly q(s);
  const auto x = random_point(rng, 5), y = random_point(rng, 5);
  for (int m = 0; m <= 4; ++m)
    EXPECT_NEAR(two_block_eval(q, two_block_weights(m, 4), x, y),
                two_block_eval(q, two_block_weights(4 - m, 4), y, x), 1e-12);
  for (int i = 0; i < 5; ++i) {
    auto lo = x, mid = x, hi = x;
    lo[i] = -1.0;
    mid[i] = 0.0;
    hi[i] = 1.0;
    const auto w = two_block_weights(2, 4);
    const double a = two_block_eval(q, w, lo, y), b = two_block_eval(q, w, mid, y),
                 c = two_block_eval(q, w, hi, y);
    EXPECT_NEAR(b, (a + c) / 2.0, 1e-12);
  }
}

TEST(VertexMax, MatchesPairwiseEnumeration) {
  const auto s = random_spectrum(3, 3, 41);
  const TetrahedralPoly q(s);
  const auto w = two_block_weights(1, 3);
  const PairMax fast = two_block_vertex_max(q, w);
  double best = -1.0;
  for (Mask xr = 0; xr < 8; ++xr)
    for (Mask yr = 0; yr < 8; ++yr)
      best = std::max(best, std::abs(placement_value(s, 3, 1, vertex(xr, 3), vertex(yr, 3))));
  EXPECT_NEAR(fast.value, best, 1e-12);
  EXPECT_NEAR(std::abs(placement_value(s, 3, 1, vertex(fast.x_row, 3), vertex(fast.y_row, 3))), best, 1e-12);
  EXPECT_THROW(two_block_vertex_max(TetrahedralPoly(random_spectrum(11, 1, 1)), w), CapacityError);
}

TEST(BoundCheck, ProductOfTwo) {
  const FourierSpectrum s(2, {{0b11, 1.0}});
  const TetrahedralPoly q(s);
  const auto r = two_block_bound_check(q, 1);
  EXPECT_DOUBLE_EQ(r.lhs, 1.0);
  EXPECT_DOUBLE_EQ(r.rhs, 4.0);
  EXPECT_TRUE(r.pass);
  const auto r0 = two_block_bound_check(q, 0);
  EXPECT_DOUBLE_EQ(r0.lhs, 1.0);
  EXPECT_THROW(two_block_bound_check(q, 2), DomainError);

  const auto h = homogeneous_polarization_check(q, 1);
  EXPECT_DOUBLE_EQ(h.rhs, 2.0);
  EXPECT_DOUBLE_EQ(h.lhs, 1.0);
}

TEST(BoundCheck, RandomInstances) {
  for (int t = 0; t < 20; ++t) {
    const auto s = random_spectrum(4, 4, 500 + t);
    const TetrahedralPoly q(s);
    for (int m = 1; m <= 2; ++m) ASSERT_TRUE(two_block_bound_check(q, m).pass);
    const auto h = random_spectrum(4, 3, 900 + t, {{3}});
    for (int k = 1; k <= 3; ++k) ASSERT_TRUE(homogeneous_polarization_check(TetrahedralPoly(h), k).pass);
  }
}

TEST(BoundCheck, HomogeneousConstant) {
  for (int d = 1; d <= 10; ++d)
    EXPECT_NEAR(homogeneous_polarization_constant(d, d), std::ldexp(1.0, d - 1), 1e-9);
  EXPECT_NEAR(homogeneous_polarization_constant(1, 2), 2.0, 1e-12);
  const auto s = random_spectrum(3, 2, 3);
  EXPECT_THROW(homogeneous_polarization_check(TetrahedralPoly(s), 1), DomainError);
}

TEST(ClassRatio, Bound) {
  for (int d = 1; d <= 10; ++d)
    for (int m = 0; m <= d; ++m) {
      const auto r = class_ratio_check(m, d, 200, 13 * d + m);
      ASSERT_TRUE(r.pass);
      EXPECT_LE(r.lhs, r.rhs);
    }
  // Distinct nonzero entries attain C(d, m).
  const std::vector<int> j1{1, 2}, j2{3, 4, 5}, all{1, 2, 3, 4, 5};
  EXPECT_TRUE(class_size(all) == binomial(5, 2) * class_size(j1) * class_size(j2));
}
