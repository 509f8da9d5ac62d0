#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "bspec/cube.hpp"
#include "bspec/errors.hpp"
#include "bspec/parallel.hpp"
#include "bspec/random.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

BooleanFunction random_function(int n, Rng& rng) {
  std::vector<double> v(std::size_t{1} << n);
  for (double& x : v) x = rng.normal();
  return BooleanFunction(n, v);
}

BooleanFunction maj3() {
  return BooleanFunction::tabulate(3, [](Mask r) { return 3 - 2 * popcount(r) > 0 ? 1.0 : -1.0; });
}

}  // namespace

TEST(Indexing, RowZeroIsAllPlus) {
  EXPECT_EQ(coordinate_sign(0, 1), 1);
  EXPECT_EQ(coordinate_sign(0b10, 2), -1);
  EXPECT_EQ(character(0b111, 0b101), 1);
  EXPECT_EQ(character(0b001, 0b101), -1);
}

TEST(BooleanFunctionCtor, Validates) {
  EXPECT_THROW(BooleanFunction(2, {1, 2, 3}), DomainError);
  EXPECT_THROW(BooleanFunction(1, {1, NAN}), DomainError);
  EXPECT_THROW(BooleanFunction(0, {1}), DomainError);
  EXPECT_THROW(BooleanFunction::constant(25, 1.0), CapacityError);
}

TEST(Transform, Dictator) {
  const BooleanFunction f(2, {1, -1, 1, -1});
  const auto s = walsh_transform(f);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.coefficients()[0].mask, 0b01u);
  EXPECT_DOUBLE_EQ(s.coefficients()[0].value, 1.0);
}

TEST(Transform, Constant) {
  const auto s = walsh_transform(BooleanFunction::constant(4, 2.5));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.coefficients()[0].mask, 0u);
  EXPECT_DOUBLE_EQ(s.coefficients()[0].value, 2.5);
  EXPECT_EQ(degree(s), 0);
}

TEST(Transform, MajorityThreeAgainstDirectSums) {
  const BooleanFunction f = maj3();
  const auto s = walsh_transform(f);
  const std::vector<double> values(f.values().begin(), f.values().end());
  for (Mask m = 0; m < 8; ++m)
    EXPECT_NEAR(s.coefficient(m), oracle::coefficient(values, 3, m), 1e-15) << m;
  EXPECT_DOUBLE_EQ(s.coefficient(0b001), 0.5);
  EXPECT_DOUBLE_EQ(s.coefficient(0b111), -0.5);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(degree(s), 3);
}

TEST(Transform, AgreesWithDirectSumsOnRandomTables) {
  Rng rng(11);
  for (int n = 1; n <= 7; ++n) {
    const BooleanFunction f = random_function(n, rng);
    const std::vector<double> values(f.values().begin(), f.values().end());
    const auto s = walsh_transform(f);
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      ASSERT_NEAR(s.coefficient(m), oracle::coefficient(values, n, m), 1e-13);
  }
}

TEST(Inverse, SimpleTables) {
  const FourierSpectrum one(3, {{0, 1.0}});
  const auto ones = inverse_transform(one);
  for (double v : ones.values()) EXPECT_EQ(v, 1.0);
  const FourierSpectrum prod(2, {{0b11, 1.0}});
  const auto f = inverse_transform(prod);
  EXPECT_EQ(std::vector<double>(f.values().begin(), f.values().end()),
            (std::vector<double>{1, -1, -1, 1}));
  const auto back = inverse_transform(walsh_transform(maj3()));
  for (std::size_t r = 0; r < 8; ++r) EXPECT_NEAR(back[r], maj3()[r], 1e-12);
}

TEST(Inverse, AgreesWithDirectEvaluation) {
  Rng rng(5);
  const int n = 5;
  std::vector<double> dense(32);
  std::vector<Coefficient> cs;
  for (Mask m = 0; m < 32; ++m) {
    dense[m] = rng.normal();
    cs.push_back({m, dense[m]});
  }
  const auto f = inverse_transform(FourierSpectrum(n, cs));
  const auto direct = oracle::evaluate(dense, n);
  for (std::size_t r = 0; r < direct.size(); ++r) EXPECT_NEAR(f[r], direct[r], 1e-12);
}

TEST(Spectrum, RejectsBadMasksAndDuplicates) {
  EXPECT_THROW(FourierSpectrum(2, {{0b100, 1.0}}), DomainError);
  EXPECT_THROW(FourierSpectrum(2, {{1, 1.0}, {1, 2.0}}), DomainError);
  EXPECT_THROW(FourierSpectrum(65), CapacityError);
  const FourierSpectrum s(3, {{0b101, 1.0}, {0b010, 0.0}});
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(degree(s), 2);
  EXPECT_EQ(degree(FourierSpectrum(3, {{0, 5.0}})), 0);
  EXPECT_EQ(degree(FourierSpectrum(3)), 0);
}

TEST(Spectrum, SparseAboveDenseCap) {
  const FourierSpectrum s(40, {{Mask{1} << 39, 1.0}});
  EXPECT_EQ(degree(s), 1);
  EXPECT_THROW(inverse_transform(s), CapacityError);
}

TEST(Levels, HomogeneousPart) {
  const auto s = walsh_transform(maj3());
  const auto l1 = homogeneous_part(s, 1);
  EXPECT_EQ(l1.size(), 3u);
  for (const auto& c : l1.coefficients()) EXPECT_DOUBLE_EQ(c.value, 0.5);
  EXPECT_TRUE(homogeneous_part(s, 2).empty());
  EXPECT_TRUE(homogeneous_part(s, 0).empty());
  EXPECT_THROW(homogeneous_part(s, 4), DomainError);
  EXPECT_THROW(homogeneous_part(s, -1), DomainError);
  EXPECT_EQ(truncate_degree(s, 2).size(), 3u);
}

TEST(Norms, Examples) {
  EXPECT_DOUBLE_EQ(sup_norm(maj3()).value, 1.0);
  const auto half_sum =
      BooleanFunction::tabulate(3, [](Mask r) { return (3 - 2.0 * popcount(r)) / 2.0; });
  EXPECT_DOUBLE_EQ(sup_norm(half_sum).value, 1.5);
  EXPECT_EQ(sup_norm(half_sum).row, 0u);
  EXPECT_EQ(sup_norm(BooleanFunction::constant(3, 0.0)).value, 0.0);

  for (double p : {1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()}) EXPECT_DOUBLE_EQ(p_norm(maj3(), p), 1.0);
  const BooleanFunction x1x2(2, {2, 0, 0, -2});  // x1 + x2
  EXPECT_NEAR(p_norm(x1x2, 2.0), std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(p_norm(BooleanFunction::constant(2, -3.0), 1.7), 3.0);
  EXPECT_THROW(p_norm(x1x2, 0.5), DomainError);
}

TEST(Norms, SupTiesPickSmallestRow) {
  const BooleanFunction f(2, {-1, 3, -3, 3});
  EXPECT_EQ(sup_norm(f).row, 1u);
}

TEST(Noise, ScalesByLevel) {
  const FourierSpectrum s(2, {{0b11, 1.0}});
  EXPECT_DOUBLE_EQ(noise_operator(s, 0.5).coefficient(0b11), 0.25);
  EXPECT_EQ(noise_operator(s, 1.0), s);
}

TEST(Noise, Semigroup) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto s = walsh_transform(random_function(6, rng));
    const double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
    const auto twice = noise_operator(noise_operator(s, a), b);
    const auto once = noise_operator(s, a * b);
    for (const auto& c : s.coefficients())
      EXPECT_NEAR(twice.coefficient(c.mask), once.coefficient(c.mask), 1e-12);
  }
}

TEST(Influence, Examples) {
  const FourierSpectrum prod(2, {{0b11, 1.0}});
  EXPECT_DOUBLE_EQ(variance(prod), 1.0);
  EXPECT_DOUBLE_EQ(influence(prod, 1), 1.0);
  EXPECT_DOUBLE_EQ(influence(prod, 2), 1.0);
  EXPECT_EQ(max_influence(prod).coordinate, 1);
  EXPECT_THROW(influence(prod, 3), DomainError);
  EXPECT_THROW(influence(prod, 0), DomainError);

  const auto s = walsh_transform(maj3());
  EXPECT_DOUBLE_EQ(variance(s), 1.0);
  for (int j = 1; j <= 3; ++j) EXPECT_DOUBLE_EQ(influence(s, j), 0.5);
  EXPECT_EQ(variance(FourierSpectrum(3, {{0, 4.0}})), 0.0);
}

TEST(Influence, TotalIsLevelWeightedEnergy) {
  Rng rng(8);
  const auto s = walsh_transform(random_function(7, rng));
  double sum = 0.0;
  for (double v : influences(s)) sum += v;
  EXPECT_NEAR(sum, total_influence(s), 1e-12 * sum);
}

TEST(Properties, RoundTripAndParseval) {
  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 12;
    const BooleanFunction f = random_function(n, rng);
    const auto s = walsh_transform(f);
    const auto back = inverse_transform(s);
    double energy = 0.0;
    for (std::size_t r = 0; r < f.size(); ++r) {
      ASSERT_NEAR(back[r], f[r], 1e-12);
      energy += f[r] * f[r];
    }
    energy /= static_cast<double>(f.size());
    double ce = 0.0;
    for (const auto& c : s.coefficients()) ce += c.value * c.value;
    ASSERT_NEAR(ce, energy, 1e-9 * energy);
  }
}

TEST(Properties, VertexSupDominatesInteriorPoints) {
  Rng rng(17);
  const int n = 5;
  const BooleanFunction f = random_function(n, rng);
  const auto s = walsh_transform(f);
  std::vector<double> dense = dense_coefficients(s);
  const double sup = sup_norm(f).value;
  for (int t = 0; t < 1000; ++t) {
    // Convex combination of three random vertices.
    double w[3] = {rng.uniform(0, 1), rng.uniform(0, 1), rng.uniform(0, 1)};
    const double total = w[0] + w[1] + w[2];
    std::vector<double> x(n, 0.0);
    for (int k = 0; k < 3; ++k) {
      const auto v = oracle::point(static_cast<Mask>(rng.uniform_int(0, 31)), n);
      for (int i = 0; i < n; ++i) x[i] += w[k] / total * v[i];
    }
    double value = 0.0;
    for (Mask m = 0; m < dense.size(); ++m) value += dense[m] * oracle::monomial(x, m);
    ASSERT_LE(std::abs(value), sup * (1 + 1e-12));
  }
}

TEST(Determinism, ThreadCountDoesNotChangeResults) {
  Rng rng(99);
  const BooleanFunction f = random_function(18, rng);
  set_max_threads(1);
  const auto s1 = walsh_transform(f);
  const double p1 = p_norm(f, 3.0);
  const auto sup1 = sup_norm(f);
  set_max_threads(4);
  const auto s4 = walsh_transform(f);
  const double p4 = p_norm(f, 3.0);
  const auto sup4 = sup_norm(f);
  set_max_threads(0);
  EXPECT_EQ(s1, s4);
  EXPECT_EQ(p1, p4);
  EXPECT_EQ(sup1.value, sup4.value);
  EXPECT_EQ(sup1.row, sup4.row);
}

TEST(Summation, PairwiseIsOrderFixed) {
  std::vector<double> xs(1000);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 1.0 / (i + 1);
  const double a = pairwise_sum(xs);
  const double b = deterministic_sum(xs.size(), [&](std::size_t i) { return xs[i]; });
  EXPECT_EQ(a, b);
  EXPECT_NEAR(a, 7.485470860550345, 1e-12);
}
