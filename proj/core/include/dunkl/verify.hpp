#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dunkl/bessel.hpp"
#include "dunkl/hypergeo.hpp"
#include "dunkl/jack.hpp"

namespace dunkl {

struct EvalPoint {
  EvalVector x;
  EvalVector y;
  /// |x|·|y|
  [[nodiscard]] double norm_product() const { return x.norm() * y.norm(); }
};

/// Deterministic uniform stream on top of SplitMix64, identical on every
/// platform (std:: distributions are not).
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

/// Random point generation for sweeps.
struct PointBox {
  double half_width = 1.5;       ///< coordinates uniform on [−w, w]
  double small_fraction = 0.2;   ///< share of points rescaled to small |x||y|
  double small_max = 0.1;        ///< small points get |x||y| in [small_max/5, small_max]
  double max_norm_product = 3.0; ///< draws with larger |x||y| are rejected
};

std::vector<EvalPoint> random_points(int n, int count, std::uint64_t seed,
                                     const PointBox& box = {});
/// Points with |x||y| uniform in [lo, hi] (directions drawn from the box).
std::vector<EvalPoint> band_points(int n, int count, std::uint64_t seed, double lo,
                                   double hi);

enum class SweepKind { prop11, prop12, conjecture };

const char* to_string(SweepKind kind);

struct SweepConfig {
  SweepKind kind = SweepKind::prop11;
  int n = 2;
  double k2 = 1.0;
  std::vector<double> mu_grid;
  std::vector<EvalPoint> points;
  SeriesPolicy policy;
  std::uint64_t seed = 0;
  double ceiling = std::numeric_limits<double>::infinity();

  /// Throws DomainError on an empty or non-increasing μ grid, an empty point
  /// list, μ values outside k₁ ≥ k₂(N−1), or (for prop12) k₂ ∉ {0, ½, 1, 2}.
  void validate() const;
};

/// One line of a report. `mu` is absent for μ-free checks (lemma31); the
/// point payload depends on the check.
struct ReportRecord {
  std::optional<double> mu;
  std::vector<double> x;
  std::vector<double> y;
  std::optional<Partition> lambda;
  std::optional<int> weight;
  std::optional<double> alpha;
  double error = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  bool converged = true;
  bool boundary = false;
};

using InputValue =
    std::variant<bool, std::int64_t, double, std::string, std::vector<double>>;

struct VerificationReport {
  std::string command;
  std::vector<std::pair<std::string, InputValue>> inputs;
  std::vector<ReportRecord> records;
  double empirical_constant = 0.0;
  /// Fitted order per point (−slope of log E against log μ); absent when the
  /// grid has one μ or some error is exactly zero.
  std::vector<std::optional<double>> order_per_point;
  std::optional<double> order_median;
  bool pass = false;
  bool informational = false;
  std::string policy_id = kDefaultPolicyId;
};

/// Error E = |J_B(2√μx, iy) − J_A(−x², y²)| for the multiplicity with the
/// given μ. k₂ = 0 uses the product formulas, k₂ > 0 the single series.
SeriesResult proposition_error(const MultiplicityB& mult, const EvalPoint& pt,
                               const SeriesPolicy& policy = {});

/// μE / (|x|⁴|y|⁴ e^{|x|²|y|²}); 0 when x or y vanishes.
double prop11_ratio(const MultiplicityB& mult, const EvalPoint& pt,
                    const SeriesPolicy& policy = {});

/// μE / min(|x|⁴|y|⁴, 1); 0 when x or y vanishes. Requires k₂ ∈ {0, ½, 1, 2}.
double prop12_ratio(const MultiplicityB& mult, const EvalPoint& pt,
                    const SeriesPolicy& policy = {});

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

/// Weight-m kernel sum at (x², y²) against |x|^{2m}|y|^{2m}.
BoundCheck lemma31_check(JackParameter alpha, const EvalVector& x, const EvalVector& y,
                         int m);

struct Lemma32Check {
  BoundCheck difference;  ///< |1 − μ^{|λ|}/(μ)_λ| against the |λ|²/k₁ bound
  BoundCheck ratio;       ///< μ^{|λ|}/(μ)_λ against 2^{N(N−1)(k₂+1)/2}
  [[nodiscard]] bool pass() const { return difference.pass && ratio.pass; }
};

/// Requires k₂ > 0, k₁ > 0 and k₁ ≥ k₂(N−1).
Lemma32Check lemma32_check(int n, double k1, double k2, const Partition& lambda);

struct OnedimCheck {
  double sup_ratio = 0.0;
  bool pass = false;
};

/// max over xs of μ|j_{μ−1}(√μ x) − e^{−x²/4}| / min(x⁴, 1); requires μ > 2.
OnedimCheck onedim_check(double mu, const std::vector<double>& xs,
                         double ceiling = std::numeric_limits<double>::infinity());

/// Least-squares slope of log(error) against log(mu), negated.
std::optional<double> fit_order(const std::vector<double>& mu,
                                const std::vector<double>& error);

/// Proposition sweep over (μ, point). Non-converged series fail the report.
VerificationReport run_sweep(const SweepConfig& config);

/// lemma31_check over every point and m = 0..max_weight.
VerificationReport lemma31_sweep(int n, JackParameter alpha, int max_weight, int count,
                                 std::uint64_t seed);
/// lemma32_check over all λ with |λ| ≤ max_weight, ℓ(λ) ≤ N, and the k₁ grid.
VerificationReport lemma32_sweep(int n, double k2, const std::vector<double>& k1_grid,
                                 int max_weight);
/// onedim_check on the grid x_i = x_max·i/count, i = 1..count, for each μ.
VerificationReport onedim_sweep(const std::vector<double>& mu_grid, int count,
                                double x_max, double ceiling);

}  // namespace dunkl
