#pragma once

#include <optional>

#include "dunkl/hypergeo.hpp"
#include "dunkl/jack.hpp"

namespace dunkl {

/// Multiplicity (k₁, k₂) on the B_N orbits ±e_i and ±e_i ± e_j.
class MultiplicityB {
 public:
  /// Throws DomainError unless k1, k2 ≥ 0 and n ≥ 1.
  MultiplicityB(double k1, double k2, int n);

  /// The multiplicity with the given μ: k₁ = μ − (N−1)k₂ − 1/2.
  static MultiplicityB from_mu(double mu, double k2, int n);

  [[nodiscard]] double k1() const noexcept { return k1_; }
  [[nodiscard]] double k2() const noexcept { return k2_; }
  [[nodiscard]] int n() const noexcept { return n_; }

  /// μ = k₁ + (N−1)k₂ + 1/2.
  [[nodiscard]] double mu() const noexcept { return k1_ + (n_ - 1) * k2_ + 0.5; }
  /// α = 1/k₂, absent for k₂ = 0.
  [[nodiscard]] std::optional<JackParameter> alpha() const;
  /// k₁ ≥ k₂(N−1).
  [[nodiscard]] bool in_proposition_regime() const noexcept;
  /// k₁ = k₂(N−1) up to roundoff.
  [[nodiscard]] bool on_regime_boundary() const noexcept;

 private:
  double k1_;
  double k2_;
  int n_;
};

/// Normalized Bessel function j_α(t) = ₀F₁(α+1; −t²/4), α > −1.
///
/// Summed in double precision while the alternating series loses few digits,
/// otherwise in MPFR with enough guard bits to cover the cancellation.
double bessel_j(double alpha, double t);

/// j_α(it) = ₀F₁(α+1; t²/4).
double bessel_j_imag(double alpha, double t);

/// Type-A Bessel function J_{k₂}^A(x, y) = ₀F₀^{1/k₂}(x, y); for k₂ = 0 the
/// symmetrized exponential (1/N!) Σ_w e^{⟨wx, y⟩} (tail 0).
SeriesResult besselA(double k2, const EvalVector& x, const EvalVector& y,
                     const SeriesPolicy& policy = {});

/// J_k^B(x, iy) as a real number: ₀F₁^{1/k₂}(μ; x²/2, −y²/2), or for k₂ = 0
/// the symmetrized product (1/N!) Σ_w Π_l j_{k₁−1/2}(x_{w(l)} y_l).
SeriesResult besselB_at_imag(const MultiplicityB& mult, const EvalVector& x,
                             const EvalVector& y, const SeriesPolicy& policy = {});

/// J_k^B(x, y) at real arguments: ₀F₁^{1/k₂}(μ; x²/2, y²/2).
SeriesResult besselB(const MultiplicityB& mult, const EvalVector& x, const EvalVector& y,
                     const SeriesPolicy& policy = {});

/// J_B(2√μ·x, iy) − J_A(−x², y²) summed as one series, k₂ > 0.
///
/// Weights 0 and 1 cancel identically and the coefficients
/// μ^{|λ|}/(μ)_λ − 1 are formed without subtraction, so the result keeps its
/// relative accuracy as μ → ∞.
SeriesResult besselB_scaled_diff(const MultiplicityB& mult, const EvalVector& x,
                                 const EvalVector& y, const SeriesPolicy& policy = {});
/// Same, reusing kernels built at (x², y²) with α = 1/k₂.
SeriesResult besselB_scaled_diff(const MultiplicityB& mult, KernelTable& kernels,
                                 const SeriesPolicy& policy = {});

/// Rank-one difference j_{μ−1}(2√μ·s) − e^{−s²}.
double onedim_scaled_diff(double mu, double s);

/// Matrix-cone Bessel function J_μ(X) from the eigenvalues of X, d ∈ {1, 2, 4}.
SeriesResult cone_bessel(double mu, int d, const EvalVector& eigenvalues,
                         const SeriesPolicy& policy = {});

/// k(μ, d) = (μ − (d(N−1)+1)/2, d/2). Throws DomainError if k₁ < 0.
MultiplicityB k_from_cone(double mu, int d, int n);

/// ₀F₀¹(−x², y²) via the unitary-group alternating sum
///   Π_{j<N} j! / (π(−x²) π(y²)) · Σ_w sgn(w) e^{−⟨x², w y²⟩},
/// π the Vandermonde product Π_{i<j}(a_i − a_j). Throws NumericError if two
/// squared coordinates of x (or of y) agree within 1e−9 relative.
double harish_chandra_0F0(const EvalVector& x, const EvalVector& y);

}  // namespace dunkl
