#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dunkl/errors.hpp"
#include "dunkl/jack.hpp"
#include "dunkl/partitions.hpp"
#include "golden.hpp"

namespace dunkl {
namespace {

using testing::rel_diff;

// Arm and leg of cell (i, j) in λ, 0-based.
double arm(const Partition& p, int i, int j) { return p[i] - j - 1; }
double leg(const Partition& p, int i, int j) { return p.conjugate()[j] - i - 1; }

double b_factor(const Partition& p, int i, int j, double alpha) {
  const double a = arm(p, i, j), l = leg(p, i, j);
  return (alpha * a + l + 1) / (alpha * (a + 1) + l);
}

// ψ from the hook formula: product over cells of μ lying in a row that meets
// λ/μ but in no column that meets it.
double psi_by_hooks(const Partition& lambda, const Partition& mu, double alpha) {
  std::vector<bool> strip_row(lambda.length(), false), strip_col(lambda[0], false);
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = mu[i]; j < lambda[i]; ++j) strip_row[i] = strip_col[j] = true;
  double psi = 1.0;
  for (int i = 0; i < mu.length(); ++i) {
    if (!strip_row[i]) continue;
    for (int j = 0; j < mu[i]; ++j)
      if (!strip_col[j]) psi *= b_factor(mu, i, j, alpha) / b_factor(lambda, i, j, alpha);
  }
  return psi;
}

bool horizontal_strip(const Partition& lambda, const Partition& mu) {
  for (int i = 0; i < lambda.length(); ++i)
    if (mu[i] > lambda[i] || lambda[i + 1] > mu[i]) return false;
  return mu.length() <= lambda.length();
}

double monomial(const Partition& nu, const std::vector<double>& x) {
  // m_ν by summing over distinct permutations of the padded exponents.
  std::vector<int> e = nu.padded(static_cast<int>(x.size()));
  std::sort(e.begin(), e.end());
  double total = 0.0;
  do {
    double term = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) term *= std::pow(x[i], e[i]);
    total += term;
  } while (std::next_permutation(e.begin(), e.end()));
  return total;
}

TEST(JackParameter, Validation) {
  EXPECT_THROW(JackParameter(0.0), DomainError);
  EXPECT_THROW(JackParameter(-1.0), DomainError);
  EXPECT_THROW(JackParameter(std::nan("")), DomainError);
  EXPECT_DOUBLE_EQ(JackParameter::from_multiplicity(0.5).value(), 2.0);
  EXPECT_DOUBLE_EQ(JackParameter::from_cone_dimension(4).value(), 0.5);
  EXPECT_THROW(JackParameter::from_multiplicity(0.0), DomainError);
  EXPECT_THROW(JackParameter::from_cone_dimension(3), DomainError);
}

TEST(EvalVector, Validation) {
  EXPECT_THROW(EvalVector({}), DomainError);
  EXPECT_THROW(EvalVector({1.0, INFINITY}), DomainError);
  const EvalVector v({3.0, -4.0});
  EXPECT_DOUBLE_EQ(v.norm(), 5.0);
  EXPECT_DOUBLE_EQ(v.norm_l1(), 7.0);
  EXPECT_DOUBLE_EQ(v.sum(), -1.0);
  EXPECT_DOUBLE_EQ(v.squared()[1], 16.0);
}

TEST(BranchingCoefficient, MatchesHookFormula) {
  int checked = 0;
  for (double alpha : {0.5, 1.0, 2.0, 3.7}) {
    for (int w = 1; w <= 9; ++w) {
      for (const auto& lambda : enumerate_partitions(w, 5)) {
        for (int v = 0; v <= w; ++v) {
          for (const auto& mu : enumerate_partitions(v, 5)) {
            if (!horizontal_strip(lambda, mu)) continue;
            const double got = branching_coefficient(lambda, mu, JackParameter(alpha));
            EXPECT_LT(rel_diff(got, psi_by_hooks(lambda, mu, alpha)), 1e-13)
                << lambda.to_string() << "/" << mu.to_string() << " alpha=" << alpha;
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(BranchingCoefficient, SchurCaseIsOne) {
  const JackParameter one(1.0);
  EXPECT_DOUBLE_EQ(branching_coefficient({3, 2, 1}, {2, 1}, one), 1.0);
  EXPECT_DOUBLE_EQ(branching_coefficient({4, 1}, {1}, one), 1.0);
}

TEST(JackC, WeightTwoClosedForms) {
  const std::vector<double> x{0.3, -1.2, 2.0};
  const EvalVector ev(x);
  for (double alpha : {0.25, 1.0, 2.0, 5.0}) {
    const JackParameter a(alpha);
    const double m2 = monomial({2}, x), m11 = monomial({1, 1}, x);
    EXPECT_LT(rel_diff(jack_C({2}, a, ev), m2 + 2.0 / (1 + alpha) * m11), 1e-14);
    EXPECT_LT(rel_diff(jack_C({1, 1}, a, ev), 2 * alpha / (1 + alpha) * m11), 1e-14);
  }
}

TEST(JackC, KnownValue) {
  EXPECT_LT(rel_diff(jack_C({2, 1}, JackParameter(2.0), EvalVector({1, 2, 3})), 684.0 / 5),
            1e-14);
}

TEST(JackC, WeightSumReproducesPowerOfSum) {
  const EvalVector x({0.4, 0.9, 1.3, 0.2});
  for (double alpha : {0.5, 1.0, 2.0}) {
    JackEvaluator ev(JackParameter(alpha), x, 12);
    for (int w = 0; w <= 12; ++w) {
      const auto c = ev.C_weight(w);
      const double total = std::accumulate(c.begin(), c.end(), 0.0);
      EXPECT_LT(rel_diff(total, std::pow(x.sum(), w)), 1e-13) << "w=" << w;
    }
  }
}

TEST(JackC, SymmetricAndHomogeneous) {
  const JackParameter a(1.7);
  const Partition lambda{3, 2, 1};
  const double base = jack_C(lambda, a, EvalVector({0.5, -1.1, 0.8}));
  EXPECT_LT(rel_diff(jack_C(lambda, a, EvalVector({0.8, 0.5, -1.1})), base), 1e-14);
  EXPECT_LT(rel_diff(jack_C(lambda, a, EvalVector({-1.1, 0.8, 0.5})), base), 1e-14);
  EXPECT_LT(rel_diff(jack_C(lambda, a, EvalVector({1.0, -2.2, 1.6})), 64.0 * base), 1e-14);
}

TEST(JackC, ZeroVariableIsRestriction) {
  const JackParameter a(0.6);
  const double three = jack_C({2, 1}, a, EvalVector({0.7, 1.4, 0.0}));
  EXPECT_LT(rel_diff(three, jack_C({2, 1}, a, EvalVector({0.7, 1.4}))), 1e-14);
  EXPECT_EQ(jack_C({1, 1, 1}, a, EvalVector({0.7, 1.4, 0.0})), 0.0);
}

TEST(JackC, OnesMatchesClosedForm) {
  for (double alpha : {0.3, 1.0, 2.0, 4.5}) {
    for (int n = 1; n <= 4; ++n) {
      for (int w = 0; w <= 8; ++w) {
        for (const auto& lambda : enumerate_partitions(w, n)) {
          EXPECT_LT(rel_diff(jack_C_ones(lambda, JackParameter(alpha), n),
                             jack_C_ones_closed_form(lambda, JackParameter(alpha), n)),
                    1e-13)
              << lambda.to_string() << " alpha=" << alpha << " n=" << n;
        }
      }
    }
  }
}

TEST(JackC, PAndCNormalizationsAgree) {
  const JackParameter a(2.5);
  JackEvaluator ev(a, EvalVector({0.3, 0.6, 0.9}), 6);
  for (const auto& lambda : enumerate_partitions(6, 3))
    EXPECT_LT(rel_diff(ev.C(lambda), c_from_p_factor(lambda, a) * ev.P(lambda)), 1e-14);
}

TEST(JackC, MonicInLeadingMonomial) {
  // P_λ(x) → m_λ(x) dominates for widely separated coordinates.
  const JackParameter a(1.3);
  const std::vector<double> x{1e8, 1e4, 1.0};
  const Partition lambda{3, 1};
  EXPECT_LT(rel_diff(JackEvaluator(a, EvalVector(x), 4).P(lambda), monomial(lambda, x)), 1e-3);
}

TEST(JackC, Errors) {
  const JackParameter a(1.0);
  EXPECT_THROW(jack_C({1, 1, 1}, a, EvalVector({1.0, 2.0})), DomainError);
  JackEvaluator ev(a, EvalVector({1.0, 2.0}), 3);
  EXPECT_THROW((void)ev.C({2, 2}), std::out_of_range);
  ev.extend_to(4);
  EXPECT_NO_THROW((void)ev.C({2, 2}));
  EXPECT_THROW(jack_ratio_product({1}, a, EvalVector({1.0}), EvalVector({1.0, 2.0})),
               DomainError);
}

TEST(JackC, SharedBranchingGivesSameValues) {
  const JackParameter a(0.8);
  JackEvaluator first(a, EvalVector({0.2, 0.5, 1.1}), 10);
  JackEvaluator second(a, EvalVector({0.2, 0.5, 1.1}), 4);
  second.extend_to(10);
  for (const auto& lambda : enumerate_partitions(10, 3))
    EXPECT_EQ(first.C(lambda), second.C(lambda));
}

}  // namespace
}  // namespace dunkl
