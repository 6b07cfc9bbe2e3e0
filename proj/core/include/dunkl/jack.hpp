#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dunkl/partitions.hpp"

namespace dunkl {

/// The Jack index α > 0.
class JackParameter {
 public:
  /// Throws DomainError unless alpha is finite and positive.
  explicit JackParameter(double alpha);

  /// α = 1/k₂ for a Dunkl multiplicity k₂ > 0.
  static JackParameter from_multiplicity(double k2);
  /// α = 2/d for a matrix cone over a field of real dimension d.
  static JackParameter from_cone_dimension(int d);

  [[nodiscard]] double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Argument vector (x_1, …, x_N), N ≥ 1.
class EvalVector {
 public:
  /// Throws DomainError if coords is empty or contains non-finite values.
  explicit EvalVector(std::vector<double> coords);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(coords_.size()); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return coords_[i]; }
  [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }

  /// Coordinatewise square (x_1², …, x_N²).
  [[nodiscard]] EvalVector squared() const;
  [[nodiscard]] EvalVector scaled(double t) const;
  [[nodiscard]] double norm() const;     ///< Euclidean norm
  [[nodiscard]] double norm_l1() const;  ///< Σ|x_i|
  [[nodiscard]] double sum() const;

  static EvalVector ones(int n);
  static EvalVector zeros(int n);

 private:
  std::vector<double> coords_;
};

namespace detail {
class JackBranching;
}

/// Memoized evaluator of C_λ^α at one fixed argument vector.
///
/// Internally the recursion runs over the number of variables in the monic
/// (P) normalization: P_λ(x_1..x_n) = Σ_μ P_μ(x_1..x_{n-1}) x_n^{|λ/μ|} ψ_{λ/μ}
/// with μ ranging over partitions such that λ/μ is a horizontal strip. The
/// conversion to the C-normalization, in which the weight-k sum reproduces
/// (x_1 + … + x_N)^k, is applied on lookup.
///
/// The strip lists and ψ coefficients depend only on (α, N) and are shared by
/// every evaluator with the same parameters. Construction fills the table for
/// every partition of weight ≤ max_weight with at most N parts; extend_to()
/// grows it. Lookups are const, so once populated an evaluator can be shared
/// between threads.
class JackEvaluator {
 public:
  JackEvaluator(JackParameter alpha, EvalVector x, int max_weight = 0);

  /// Populates all partitions up to the given weight. Not thread-safe.
  void extend_to(int max_weight);

  [[nodiscard]] const JackParameter& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const EvalVector& point() const noexcept { return x_; }
  [[nodiscard]] int max_weight() const noexcept { return max_weight_; }

  /// C_λ^α(x). Throws DomainError if λ.length() > N and std::out_of_range if
  /// |λ| exceeds the populated weight.
  [[nodiscard]] double C(const Partition& lambda) const;
  /// P_λ^α(x), monic in m_λ.
  [[nodiscard]] double P(const Partition& lambda) const;

  /// Partitions of weight w with at most N parts, in enumerate_partitions
  /// order, and P_λ(x) / C_λ(x) aligned with them.
  [[nodiscard]] std::span<const Partition> partitions(int w) const;
  [[nodiscard]] std::span<const double> P_weight(int w) const;
  [[nodiscard]] std::span<const double> C_weight(int w) const;

 private:
  [[nodiscard]] int index_of(const Partition& lambda) const;

  JackParameter alpha_;
  EvalVector x_;
  int max_weight_ = 0;
  std::shared_ptr<detail::JackBranching> branching_;
  // p_[n][w][i]: P of the i-th partition of w with ≤ n parts at (x_1..x_n)
  std::vector<std::vector<std::vector<double>>> p_;
  std::vector<std::vector<double>> c_;
};

/// α^{|λ|}|λ|! / c'_λ(α): the factor with C_λ^α = factor · P_λ^α, where
/// c'_λ = Π_s (α(a(s)+1) + l(s)) over the cells of λ.
double c_from_p_factor(const Partition& lambda, JackParameter alpha);

/// ψ_{λ/μ}(α) in the branching rule P_λ(x, x_n) = Σ_μ P_μ(x) x_n^{|λ/μ|} ψ_{λ/μ}.
/// Requires λ/μ to be a horizontal strip.
double branching_coefficient(const Partition& lambda, const Partition& mu,
                             JackParameter alpha);

/// C_λ^α(x). Throws DomainError if λ has more parts than x has coordinates.
double jack_C(const Partition& lambda, JackParameter alpha, const EvalVector& x);

/// C_λ^α(1, …, 1) with N ones, by the same evaluator as jack_C.
double jack_C_ones(const Partition& lambda, JackParameter alpha, int n);

/// C_λ^α(x) C_λ^α(y) / C_λ^α(1). Throws DomainError on dimension mismatch or
/// if λ has too many parts.
double jack_ratio_product(const Partition& lambda, JackParameter alpha,
                          const EvalVector& x, const EvalVector& y);

/// Closed-form C_λ^α(1_N) = α^k k! Π_s (N − l'(s) + α a'(s)) / (c_λ c'_λ),
/// with (l'(s), a'(s)) the row/column offsets of the cell. Test-facing
/// cross-check for jack_C_ones; the series code never uses it.
double jack_C_ones_closed_form(const Partition& lambda, JackParameter alpha, int n);

}  // namespace dunkl
