#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dunkl/jack.hpp"
#include "dunkl/partitions.hpp"

namespace dunkl {

/// Truncation controls for the Jack series.
struct SeriesPolicy {
  int max_weight = 40;
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;

  /// Throws DomainError unless max_weight ≥ 2 and both tolerances lie in (0, 1).
  void validate() const;
};

/// Short identifier of the default policy, echoed in CLI output.
inline constexpr const char* kDefaultPolicyId = "w40-rel1e-12-abs1e-300";

/// Identifier in the same format for an arbitrary policy.
std::string policy_id(const SeriesPolicy& policy);

struct SeriesResult {
  double value = 0.0;
  /// Bound on |dropped remainder|. Rigorous when tail_rigorous is set,
  /// otherwise a term-ratio extrapolation.
  double tail_bound = 0.0;
  int weights_summed = 0;
  bool converged = false;
  bool tail_rigorous = true;
};

/// Generalized Pochhammer symbol (μ)_λ^α = Π_j (μ − (j−1)/α)_{λ_j}.
double gen_pochhammer(double mu, const Partition& lambda, JackParameter alpha);

/// Σ_{m>M} z^m/m! for z ≥ 0. Throws DomainError for M < 0 or z < 0.
double tail_bound_0F0(double norm_product, int M);

/// Σ_{m>M} m² z^m/m! for z ≥ 0.
double tail_bound_0F0_m2(double norm_product, int M);

/// Weight-major table of Jack kernels C_λ^α(x) C_λ^α(y) / C_λ^α(1).
///
/// Grows on demand; the kernels do not depend on μ, so one table serves every
/// μ in a sweep. Not safe for concurrent mutation: extend_to() before sharing.
class KernelTable {
 public:
  struct Term {
    Partition lambda;
    double kernel;
  };

  /// Throws DomainError if x and y differ in dimension.
  KernelTable(JackParameter alpha, EvalVector x, EvalVector y);

  void extend_to(int max_weight);
  /// Terms of weight m, in enumeration order. Extends the table if needed.
  std::span<const Term> weight(int m);

  [[nodiscard]] JackParameter alpha() const noexcept { return x_.alpha(); }
  [[nodiscard]] int dimension() const noexcept { return x_.point().size(); }
  [[nodiscard]] const EvalVector& x() const noexcept { return x_.point(); }
  [[nodiscard]] const EvalVector& y() const noexcept { return y_.point(); }
  /// ‖x‖₁‖y‖₁. Bounds every weight-m kernel sum by its m-th power.
  [[nodiscard]] double norm_product() const noexcept { return norm_product_; }

 private:
  JackEvaluator x_;
  JackEvaluator y_;
  JackEvaluator ones_;
  std::vector<std::vector<Term>> by_weight_;
  double norm_product_;
};

/// ₀F₀^α(x, y) = Σ_λ C_λ(x) C_λ(y) / (C_λ(1) |λ|!).
///
/// Evaluated after translating both arguments by their coordinate medians,
/// using ₀F₀(x + c𝟏, y + d𝟏) = e^{cΣy + dΣx + Ncd} ₀F₀(x, y); this shrinks the
/// alternating cancellation for arguments such as (−u², v²).
SeriesResult hyper_0F0(JackParameter alpha, const EvalVector& x, const EvalVector& y,
                       const SeriesPolicy& policy = {});

/// ₀F₁^α(μ; x, y) = Σ_λ C_λ(x) C_λ(y) / (C_λ(1) (μ)_λ |λ|!).
///
/// Throws NumericError naming the partition if a Pochhammer symbol vanishes.
/// The tail bound is rigorous whenever μ − (N−1)/α > 0.
SeriesResult hyper_0F1(JackParameter alpha, double mu, const EvalVector& x,
                       const EvalVector& y, const SeriesPolicy& policy = {});

/// Σ_λ (−1)^{|λ|} C_λ(x) / ((μ)_λ |λ|!), the one-argument cone series.
SeriesResult hyper_0F1_one_arg(JackParameter alpha, double mu, const EvalVector& x,
                               const SeriesPolicy& policy = {});

/// Σ_λ (−1)^{|λ|} (μ^{|λ|}/(μ)_λ) C_λ(u) C_λ(v) / (C_λ(1) |λ|!).
///
/// Equal to ₀F₁^α(μ; 2μu, −v/2) without forming μ-scaled arguments, so no term
/// overflows as μ grows. u, v are the squared vectors x², y².
SeriesResult hyper_0F1_muscaled(JackParameter alpha, double mu, const EvalVector& u,
                                const EvalVector& v, const SeriesPolicy& policy = {});
SeriesResult hyper_0F1_muscaled(KernelTable& kernels, double mu,
                                const SeriesPolicy& policy = {});

/// Σ_λ (−1)^{|λ|} (μ^{|λ|}/(μ)_λ − 1) C_λ(u) C_λ(v) / (C_λ(1) |λ|!).
///
/// The difference of the μ-scaled ₀F₁ and ₀F₀(−u, v) as one series. Weights
/// 0 and 1 vanish identically; the coefficient is formed with expm1/log1p.
SeriesResult muscaled_difference(KernelTable& kernels, double mu,
                                 const SeriesPolicy& policy = {});

/// 2^{N(N−1)(k₂+1)/2}: bound on μ^{|λ|}/(μ)_λ when k₁ ≥ k₂(N−1).
double pochhammer_ratio_bound(int n, double k2);

}  // namespace dunkl
