#include "dunkl/bessel.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dunkl/errors.hpp"

namespace dunkl {

MultiplicityB::MultiplicityB(double k1, double k2, int n) : k1_(k1), k2_(k2), n_(n) {
  if (!(k1 >= 0.0) || !std::isfinite(k1)) throw DomainError("multiplicity k1 must be >= 0");
  if (!(k2 >= 0.0) || !std::isfinite(k2)) throw DomainError("multiplicity k2 must be >= 0");
  if (n < 1) throw DomainError("dimension N must be at least 1");
}

MultiplicityB MultiplicityB::from_mu(double mu, double k2, int n) {
  if (n < 1) throw DomainError("dimension N must be at least 1");
  double k1 = mu - (n - 1) * k2 - 0.5;
  // absorb roundoff when μ sits exactly on k₁ = 0
  if (k1 < 0.0 && k1 > -1e-12 * std::max(1.0, std::abs(mu))) k1 = 0.0;
  if (k1 < 0.0)
    throw DomainError("mu = " + std::to_string(mu) + " gives negative k1 = " +
                      std::to_string(k1));
  return MultiplicityB(k1, k2, n);
}

std::optional<JackParameter> MultiplicityB::alpha() const {
  if (k2_ == 0.0) return std::nullopt;
  return JackParameter::from_multiplicity(k2_);
}

bool MultiplicityB::in_proposition_regime() const noexcept {
  return k1_ >= k2_ * (n_ - 1) || on_regime_boundary();
}

bool MultiplicityB::on_regime_boundary() const noexcept {
  const double edge = k2_ * (n_ - 1);
  return std::abs(k1_ - edge) <= 1e-12 * std::max(1.0, edge);
}

namespace {

// Σ (−z)^n / ((a)_n n!) in MPFR, with enough guard bits to absorb the
// alternating cancellation.
double j_series_mpfr(double a, double z) {
  const double nats = 2.0 * std::sqrt(z);
  const auto prec = static_cast<mpfr_prec_t>(128 + std::ceil(nats * 1.4426950408889634) +
                                             std::ceil(std::log2(1.0 + 1.0 / a)));
  mpfr_t zz, term, sum, an, nn;
  mpfr_inits2(prec, zz, term, sum, an, nn, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(zz, z, MPFR_RNDN);
  mpfr_set_ui(term, 1, MPFR_RNDN);
  mpfr_set_ui(sum, 1, MPFR_RNDN);
  mpfr_set_d(an, a, MPFR_RNDN);
  mpfr_set_ui(nn, 1, MPFR_RNDN);
  for (long n = 0;; ++n) {
    mpfr_mul(term, term, zz, MPFR_RNDN);
    mpfr_neg(term, term, MPFR_RNDN);
    mpfr_div(term, term, an, MPFR_RNDN);
    mpfr_div(term, term, nn, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    mpfr_add_ui(an, an, 1, MPFR_RNDN);
    mpfr_add_ui(nn, nn, 1, MPFR_RNDN);
    const double ratio = z / ((a + n + 1) * (n + 2.0));
    if (mpfr_zero_p(term)) break;
    if (ratio < 0.5 && !mpfr_zero_p(sum) &&
        mpfr_get_exp(term) < mpfr_get_exp(sum) - 64)
      break;
  }
  const double out = mpfr_get_d(sum, MPFR_RNDN);
  mpfr_clears(zz, term, sum, an, nn, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// Σ s^n z^n / ((a)_n n!) in double; s = ±1.
double j_series_double(double a, double z, double sign) {
  double term = 1.0, sum = 1.0;
  for (int n = 0; n < 100000; ++n) {
    term *= sign * z / ((a + n) * (n + 1.0));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && z < (a + n + 1) * (n + 2.0)) break;
  }
  return sum;
}

void require_alpha(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha))
    throw DomainError("Bessel index alpha must be finite and > -1");
}

void require_dimensions(const MultiplicityB& mult, const EvalVector& x, const EvalVector& y) {
  if (x.size() != y.size())
    throw DomainError("x and y must have the same dimension (" + std::to_string(x.size()) +
                      " vs " + std::to_string(y.size()) + ")");
  if (x.size() != mult.n())
    throw DomainError("point dimension " + std::to_string(x.size()) +
                      " does not match N = " + std::to_string(mult.n()));
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

int permutation_sign(const std::vector<int>& w) {
  int inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) inversions += w[i] > w[j];
  return inversions % 2 ? -1 : 1;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// (1/N!) Σ_w Π_l f(x_{w(l)} y_l)
template <class F>
double symmetrized_product(const EvalVector& x, const EvalVector& y, F&& f) {
  const int n = x.size();
  std::vector<int> w = identity_permutation(n);
  double total = 0.0;
  do {
    double prod = 1.0;
    for (int l = 0; l < n; ++l) prod *= f(x[w[l]] * y[l]);
    total += prod;
  } while (std::next_permutation(w.begin(), w.end()));
  return total / factorial(n);
}

SeriesResult exact(double value) {
  SeriesResult r;
  r.value = value;
  r.tail_bound = 0.0;
  r.converged = true;
  return r;
}

}  // namespace

double bessel_j(double alpha, double t) {
  require_alpha(alpha);
  if (!std::isfinite(t)) throw DomainError("bessel_j argument must be finite");
  const double a = alpha + 1.0;
  const double z = 0.25 * t * t;
  if (z == 0.0) return 1.0;
  // log of the largest term relative to the result, roughly
  const double loss = a >= 1.0 ? std::min(z / a, 2.0 * std::sqrt(z))
                               : 2.0 * std::sqrt(z) + std::log(1.0 / a) + 1.0;
  if (loss <= 3.0) return j_series_double(a, z, -1.0);
  return j_series_mpfr(a, z);
}

double bessel_j_imag(double alpha, double t) {
  require_alpha(alpha);
  if (!std::isfinite(t)) throw DomainError("bessel_j_imag argument must be finite");
  return j_series_double(alpha + 1.0, 0.25 * t * t, 1.0);
}

SeriesResult besselA(double k2, const EvalVector& x, const EvalVector& y,
                     const SeriesPolicy& policy) {
  if (!(k2 >= 0.0) || !std::isfinite(k2)) throw DomainError("multiplicity k2 must be >= 0");
  if (x.size() != y.size()) throw DomainError("x and y must have the same dimension");
  if (k2 > 0.0) return hyper_0F0(JackParameter::from_multiplicity(k2), x, y, policy);
  policy.validate();
  // (1/N!) Σ_w e^{⟨wx, y⟩}, factored around the largest exponent
  const int n = x.size();
  std::vector<int> w = identity_permutation(n);
  std::vector<double> exponents;
  do {
    double e = 0.0;
    for (int l = 0; l < n; ++l) e += x[w[l]] * y[l];
    exponents.push_back(e);
  } while (std::next_permutation(w.begin(), w.end()));
  const double top = *std::max_element(exponents.begin(), exponents.end());
  double total = 0.0;
  for (double e : exponents) total += std::exp(e - top);
  return exact(std::exp(top) * total / factorial(n));
}

SeriesResult besselB_at_imag(const MultiplicityB& mult, const EvalVector& x,
                             const EvalVector& y, const SeriesPolicy& policy) {
  require_dimensions(mult, x, y);
  if (const auto alpha = mult.alpha())
    return hyper_0F1(*alpha, mult.mu(), x.squared().scaled(0.5), y.squared().scaled(-0.5),
                     policy);
  policy.validate();
  const double index = mult.k1() - 0.5;
  return exact(symmetrized_product(x, y, [&](double t) { return bessel_j(index, t); }));
}

SeriesResult besselB(const MultiplicityB& mult, const EvalVector& x, const EvalVector& y,
                     const SeriesPolicy& policy) {
  require_dimensions(mult, x, y);
  if (const auto alpha = mult.alpha())
    return hyper_0F1(*alpha, mult.mu(), x.squared().scaled(0.5), y.squared().scaled(0.5),
                     policy);
  policy.validate();
  const double index = mult.k1() - 0.5;
  return exact(symmetrized_product(x, y, [&](double t) { return bessel_j_imag(index, t); }));
}

SeriesResult besselB_scaled_diff(const MultiplicityB& mult, KernelTable& kernels,
                                 const SeriesPolicy& policy) {
  const auto alpha = mult.alpha();
  if (!alpha) throw DomainError("the single-series difference requires k2 > 0");
  if (kernels.dimension() != mult.n())
    throw DomainError("kernel table dimension does not match N");
  if (std::abs(kernels.alpha().value() - alpha->value()) > 1e-15 * alpha->value())
    throw DomainError("kernel table alpha does not match 1/k2");
  return muscaled_difference(kernels, mult.mu(), policy);
}

SeriesResult besselB_scaled_diff(const MultiplicityB& mult, const EvalVector& x,
                                 const EvalVector& y, const SeriesPolicy& policy) {
  require_dimensions(mult, x, y);
  const auto alpha = mult.alpha();
  if (!alpha) throw DomainError("the single-series difference requires k2 > 0");
  KernelTable kernels(*alpha, x.squared(), y.squared());
  return muscaled_difference(kernels, mult.mu(), policy);
}

double onedim_scaled_diff(double mu, double s) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("mu must be positive");
  if (!std::isfinite(s)) throw DomainError("argument must be finite");
  const double z = s * s;
  if (z > 4.0) return bessel_j(mu - 1.0, 2.0 * std::sqrt(mu) * s) - std::exp(-z);
  // Σ_{n≥2} (−z)^n/n! (μ^n/(μ)_n − 1); the coefficients have modulus < 1
  double log_ratio = -std::log1p(1.0 / mu);  // log(μ²/(μ)_2)
  double power = 0.5 * z * z;                // z^n/n! at n = 2
  double sum = 0.0, comp = 0.0;
  for (int n = 2; n < 200; ++n) {
    const double term = (n % 2 ? -power : power) * std::expm1(log_ratio);
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    if (power <= 1e-18 * std::abs(sum + comp)) break;
    log_ratio -= std::log1p(n / mu);
    power *= z / (n + 1);
  }
  return sum + comp;
}

SeriesResult cone_bessel(double mu, int d, const EvalVector& eigenvalues,
                         const SeriesPolicy& policy) {
  return hyper_0F1_one_arg(JackParameter::from_cone_dimension(d), mu, eigenvalues, policy);
}

MultiplicityB k_from_cone(double mu, int d, int n) {
  if (d != 1 && d != 2 && d != 4) throw DomainError("cone dimension d must be 1, 2 or 4");
  if (n < 1) throw DomainError("dimension N must be at least 1");
  const double k1 = mu - (d * (n - 1) + 1) / 2.0;
  if (k1 < 0.0)
    throw DomainError("k(mu, d) has negative k1 = " + std::to_string(k1));
  return MultiplicityB(k1, d / 2.0, n);
}

double harish_chandra_0F0(const EvalVector& x, const EvalVector& y) {
  if (x.size() != y.size()) throw DomainError("x and y must have the same dimension");
  const int n = x.size();
  const EvalVector xs = x.squared(), ys = y.squared();
  std::vector<double> a(xs.coords().begin(), xs.coords().end());
  std::vector<double> b(ys.coords().begin(), ys.coords().end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (n == 1) return std::exp(-a[0] * b[0]);

  // log of Π|a_j − a_i| Π|b_j − b_i| over i < j
  double log_den = 0.0;
  for (const auto* v : {&a, &b}) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double gap = (*v)[j] - (*v)[i];
        if (gap <= 1e-9 * std::max(std::abs((*v)[i]), std::abs((*v)[j])))
          throw NumericError("Harish-Chandra formula is singular: squared coordinates " +
                             std::to_string((*v)[i]) + " and " + std::to_string((*v)[j]) +
                             " coincide");
        log_den += std::log(gap);
      }
    }
  }
  double log_fact = 0.0;
  for (int j = 1; j < n; ++j) log_fact += std::lgamma(j + 1.0);

  // Σ_w sgn(w) e^{−⟨a, w b⟩}
  std::vector<int> w = identity_permutation(n);
  std::vector<std::pair<double, int>> terms;
  do {
    double e = 0.0;
    for (int l = 0; l < n; ++l) e -= a[l] * b[w[l]];
    terms.emplace_back(e, permutation_sign(w));
  } while (std::next_permutation(w.begin(), w.end()));
  const double top =
      std::max_element(terms.begin(), terms.end())->first;
  double alternating = 0.0;
  if (n == 2) {
    // e^{e_id} − e^{e_swap} relative to the larger exponent
    const double e_id = terms[0].first, e_swap = terms[1].first;
    alternating = e_swap >= e_id ? std::expm1(e_id - e_swap) : -std::expm1(e_swap - e_id);
  } else {
    for (const auto& [e, sign] : terms) alternating += sign * std::exp(e - top);
  }
  // for ascending a, b: π(−a)π(b) = (−1)^{N(N−1)/2} Π|gaps|
  const double sign = (n * (n - 1) / 2) % 2 ? -1.0 : 1.0;
  return sign * alternating * std::exp(top + log_fact - log_den);
}

}  // namespace dunkl
