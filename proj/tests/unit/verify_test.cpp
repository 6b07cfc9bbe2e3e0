#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/verify.hpp"
#include "golden.hpp"

namespace dunkl {
namespace {

using testing::as_double;
using testing::golden;
using testing::rel_diff;

SweepConfig small_config(SweepKind kind, double k2) {
  SweepConfig c;
  c.kind = kind;
  c.n = 2;
  c.k2 = k2;
  c.mu_grid = {10, 100, 1000};
  PointBox box;
  box.max_norm_product = 1.0;
  c.points = random_points(2, 4, 5, box);
  c.seed = 5;
  return c;
}

TEST(SeededUniform, SplitMix64Golden) {
  SeededUniform rng(1234567);
  for (const auto& g : golden()["splitmix64_seed_1234567"])
    EXPECT_EQ(rng.next_u64(), std::stoull(g.get<std::string>()));
}

TEST(SeededUniform, StaysInRange) {
  SeededUniform rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform(-2.0, 3.0);
    EXPECT_GE(u, -2.0);
    EXPECT_LT(u, 3.0);
  }
}

TEST(RandomPoints, DeterministicAndWithinBox) {
  PointBox box;
  box.max_norm_product = 2.0;
  const auto a = random_points(3, 50, 17, box);
  const auto b = random_points(3, 50, 17, box);
  ASSERT_EQ(a.size(), 50u);
  int small = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x.size(), 3);
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(a[i].x[j], b[i].x[j]);
      EXPECT_LE(std::abs(a[i].x[j]), box.half_width);
    }
    const double np = a[i].norm_product();
    EXPECT_GT(np, 0.0);
    EXPECT_LE(np, box.max_norm_product * (1 + 1e-12));
    if (np <= box.small_max * (1 + 1e-12)) ++small;
  }
  EXPECT_GE(small, 10);
  EXPECT_NE(random_points(3, 1, 18, box)[0].x[0], a[0].x[0]);
}

TEST(BandPoints, NormProductInBand) {
  for (const auto& pt : band_points(2, 30, 3, 2.0, 3.0)) {
    EXPECT_GE(pt.norm_product(), 2.0 * (1 - 1e-12));
    EXPECT_LE(pt.norm_product(), 3.0 * (1 + 1e-12));
  }
  EXPECT_THROW(band_points(2, 3, 1, 0.0, 1.0), DomainError);
  EXPECT_THROW(band_points(2, 0, 1, 1.0, 2.0), DomainError);
}

TEST(FitOrder, RecoversPowerLaw) {
  const std::vector<double> mu{10, 100, 1000, 10000};
  std::vector<double> e;
  for (double m : mu) e.push_back(3.0 / std::pow(m, 1.5));
  EXPECT_NEAR(*fit_order(mu, e), 1.5, 1e-12);
  EXPECT_FALSE(fit_order({10}, {0.1}).has_value());
  EXPECT_FALSE(fit_order({10, 100}, {0.1, 0.0}).has_value());
  EXPECT_THROW(fit_order({10, 100}, {0.1}), DomainError);
}

TEST(Lemma32, WorkedExample) {
  // N = 2, k1 = 4, k2 = 1, λ = (2): μ = 5.5, ρ = μ/(μ+1)
  const auto c = lemma32_check(2, 4.0, 1.0, {2});
  EXPECT_NEAR(c.difference.lhs, 1 / 6.5, 1e-15);
  EXPECT_NEAR(c.difference.rhs, 8.0 / 3.0, 1e-15);
  EXPECT_NEAR(c.ratio.lhs, 5.5 / 6.5, 1e-15);
  EXPECT_DOUBLE_EQ(c.ratio.rhs, 4.0);
  EXPECT_TRUE(c.pass());
  EXPECT_THROW(lemma32_check(2, 0.5, 1.0, {2}), DomainError);
  EXPECT_THROW(lemma32_check(2, 4.0, 0.0, {2}), DomainError);
  EXPECT_THROW(lemma32_check(2, 4.0, 1.0, {1, 1, 1}), DomainError);
}

// With N = 1 the factor 2^{N(N−1)(k₂+1)/2} is 1 and the stated constant is too
// small: μ = 100.5, λ = (6) gives |1 − ρ| ≈ 0.13636 against 36/300.
TEST(Lemma32, RankOneCounterexample) {
  const auto c = lemma32_check(1, 100.0, 0.5, {6});
  EXPECT_NEAR(c.difference.lhs, 0.13636287843532974, 1e-13);
  EXPECT_NEAR(c.difference.rhs, 0.12, 1e-15);
  EXPECT_FALSE(c.difference.pass);
  EXPECT_TRUE(c.ratio.pass);
}

TEST(Lemma32, HoldsOnGridForNAtLeastTwo) {
  for (int n = 2; n <= 4; ++n) {
    for (double k2 : {0.5, 1.0, 2.0}) {
      for (double k1 : {k2 * (n - 1), 2.0, 10.0, 100.0}) {
        if (k1 < k2 * (n - 1)) continue;
        for (int m = 0; m <= 8; ++m)
          for (const auto& lambda : enumerate_partitions(m, n))
            EXPECT_TRUE(lemma32_check(n, k1, k2, lambda).pass())
                << "N=" << n << " k1=" << k1 << " k2=" << k2 << " " << lambda.to_string();
      }
    }
  }
}

TEST(Lemma31, LowWeights) {
  const EvalVector x({0.6, -1.2}), y({0.8, 0.3});
  const JackParameter a(1.5);
  const auto c0 = lemma31_check(a, x, y, 0);
  EXPECT_EQ(c0.lhs, 1.0);
  EXPECT_EQ(c0.rhs, 1.0);
  const auto c1 = lemma31_check(a, x, y, 1);
  const double nx = x.norm() * x.norm(), ny = y.norm() * y.norm();
  EXPECT_LT(rel_diff(c1.lhs, nx * ny / 2), 1e-15);
  EXPECT_LT(rel_diff(c1.rhs, nx * ny), 1e-15);
  for (int m = 0; m <= 10; ++m) EXPECT_TRUE(lemma31_check(a, x, y, m).pass);
  EXPECT_THROW(lemma31_check(a, x, y, -1), DomainError);
}

TEST(Onedim, SupRatiosMatchGolden) {
  std::vector<double> xs;
  for (int i = 1; i <= 200; ++i) xs.push_back(10.0 * i / 200);
  for (const auto& g : golden()["onedim_sup_ratio"]) {
    const auto c = onedim_check(g["mu"], xs);
    EXPECT_LT(rel_diff(c.sup_ratio, as_double(g["value"])), 1e-10);
    EXPECT_TRUE(c.pass);
  }
  EXPECT_EQ(onedim_check(8.0, {0.0}).sup_ratio, 0.0);
  EXPECT_FALSE(onedim_check(8.0, xs, 0.1).pass);
  EXPECT_THROW(onedim_check(2.0, xs), DomainError);
}

TEST(PropositionError, ProductCaseMatchesSeparateFormulas) {
  const EvalPoint pt{EvalVector({0.4, 0.9}), EvalVector({0.7, -0.3})};
  for (double mu : {3.0, 10.0, 40.0}) {
    const MultiplicityB mult = MultiplicityB::from_mu(mu, 0.0, 2);
    const double s = 2 * std::sqrt(mu);
    const double separate = besselB_at_imag(mult, pt.x.scaled(s), pt.y).value -
                            besselA(0.0, pt.x.squared().scaled(-1.0), pt.y.squared()).value;
    EXPECT_LT(std::abs(proposition_error(mult, pt).value - std::abs(separate)), 1e-14);
  }
}

TEST(PropositionError, RatiosAreRecomputable) {
  const EvalPoint pt{EvalVector({0.5, 0.2}), EvalVector({0.3, 0.6})};
  const MultiplicityB mult = MultiplicityB::from_mu(50.0, 1.0, 2);
  const double e = proposition_error(mult, pt).value;
  const double p = pt.norm_product();
  EXPECT_LT(rel_diff(prop11_ratio(mult, pt), 50.0 * e / (std::pow(p, 4) * std::exp(p * p))),
            1e-15);
  EXPECT_LT(rel_diff(prop12_ratio(mult, pt), 50.0 * e / std::min(std::pow(p, 4), 1.0)), 1e-15);
  const EvalPoint zero{EvalVector({0.0, 0.0}), EvalVector({0.3, 0.6})};
  EXPECT_EQ(prop12_ratio(mult, zero), 0.0);
  EXPECT_THROW(prop12_ratio(MultiplicityB::from_mu(50.0, 0.7, 2), pt), DomainError);
  EXPECT_THROW(prop11_ratio(MultiplicityB::from_mu(50.0, 0.0, 2), pt), DomainError);
}

TEST(SweepConfig, Validation) {
  auto c = small_config(SweepKind::prop11, 1.0);
  EXPECT_NO_THROW(c.validate());
  c.k2 = 0.0;
  EXPECT_THROW(c.validate(), DomainError);
  c = small_config(SweepKind::prop12, 0.7);
  EXPECT_THROW(c.validate(), DomainError);
  c = small_config(SweepKind::conjecture, 0.7);
  EXPECT_NO_THROW(c.validate());
  c.mu_grid = {100, 10};
  EXPECT_THROW(c.validate(), DomainError);
  c.mu_grid = {1.0};  // k1 < k2(N−1)
  EXPECT_THROW(c.validate(), DomainError);
  c = small_config(SweepKind::prop11, 1.0);
  c.points.clear();
  EXPECT_THROW(c.validate(), DomainError);
  c = small_config(SweepKind::prop11, 1.0);
  c.points = random_points(3, 2, 1);
  EXPECT_THROW(c.validate(), DomainError);
}

TEST(RunSweep, RecordsAreConsistent) {
  const auto cfg = small_config(SweepKind::prop12, 1.0);
  const auto report = run_sweep(cfg);
  EXPECT_EQ(report.command, "verify prop12");
  ASSERT_EQ(report.records.size(), cfg.mu_grid.size() * cfg.points.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    EXPECT_EQ(*r.mu, cfg.mu_grid[i / cfg.points.size()]);
    EXPECT_TRUE(r.converged);
    EXPECT_LT(rel_diff(r.ratio, *r.mu * r.error / r.denominator), 1e-15);
    worst = std::max(worst, r.ratio);
  }
  EXPECT_EQ(report.empirical_constant, worst);
  EXPECT_EQ(report.order_per_point.size(), cfg.points.size());
  ASSERT_TRUE(report.order_median.has_value());
  EXPECT_NEAR(*report.order_median, 1.0, 0.1);
  EXPECT_TRUE(report.pass);
}

TEST(RunSweep, CeilingDecidesPass) {
  auto cfg = small_config(SweepKind::prop11, 0.5);
  cfg.ceiling = 1e-6;
  EXPECT_FALSE(run_sweep(cfg).pass);
  cfg.mu_grid = {50};
  cfg.ceiling = 1.0;
  const auto r = run_sweep(cfg);
  EXPECT_FALSE(r.order_median.has_value());
  for (const auto& o : r.order_per_point) EXPECT_FALSE(o.has_value());
}

TEST(RunSweep, ConjectureIsInformational) {
  const auto r = run_sweep(small_config(SweepKind::conjecture, 0.7));
  EXPECT_TRUE(r.informational);
  EXPECT_EQ(r.command, "verify conjecture");
}

TEST(RunSweep, BoundaryFlagged) {
  auto cfg = small_config(SweepKind::prop12, 1.0);
  cfg.mu_grid = {2.5};  // k1 = 1 = k2(N−1)
  const auto r = run_sweep(cfg);
  for (const auto& rec : r.records) EXPECT_TRUE(rec.boundary);
}

TEST(LemmaSweeps, Pass) {
  const auto l31 = lemma31_sweep(3, JackParameter(0.5), 6, 5, 2);
  EXPECT_TRUE(l31.pass);
  EXPECT_EQ(l31.records.size(), 5u * 7u);
  EXPECT_LE(l31.empirical_constant, 1.0 + 1e-10);
  const auto l32 = lemma32_sweep(3, 1.0, {2.0, 10.0}, 6);
  EXPECT_TRUE(l32.pass);
  EXPECT_EQ(l32.records.size(), 2u * (1 + 1 + 2 + 3 + 4 + 5 + 7));
}

TEST(OnedimSweep, OrdersNearOne) {
  const auto r = onedim_sweep({4, 16, 64, 256}, 200, 10.0, 1.0);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.order_per_point.size(), 200u);
  EXPECT_NEAR(*r.order_per_point[19], 0.96, 0.02);
  EXPECT_THROW(onedim_sweep({2.0}, 10, 1.0, 1.0), DomainError);
}

}  // namespace
}  // namespace dunkl
