#include "dunkl/hypergeo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "dunkl/errors.hpp"

namespace dunkl {

void SeriesPolicy::validate() const {
  if (max_weight < 2) throw DomainError("series policy: max_weight must be at least 2");
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw DomainError("series policy: rel_tol must lie in (0, 1)");
  if (!(abs_tol > 0.0 && abs_tol < 1.0))
    throw DomainError("series policy: abs_tol must lie in (0, 1)");
}

std::string policy_id(const SeriesPolicy& policy) {
  auto compact = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    std::string s = buf;
    // 1e-12 rather than 1e-012 on every platform
    if (const auto e = s.find("e-0"); e != std::string::npos) s.erase(e + 2, 1);
    if (const auto e = s.find("e+"); e != std::string::npos) s.erase(e + 1, 1);
    return s;
  };
  return "w" + std::to_string(policy.max_weight) + "-rel" + compact(policy.rel_tol) + "-abs" +
         compact(policy.abs_tol);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Visits the Pochhammer factor offsets s = i − j/α, one per cell, so that
// (μ)_λ = Π (μ + s). Cells are visited row by row.
template <class F>
void for_each_cell_offset(const Partition& lambda, double alpha, F&& f) {
  for (int row = 0; row < lambda.length(); ++row)
    for (int col = 0; col < lambda[row]; ++col) f(col - row / alpha);
}

bool is_zero_factor(double mu, double offset) {
  const double factor = mu + offset;
  return std::abs(factor) <= 1e-12 * std::max({1.0, std::abs(mu), std::abs(offset)});
}

[[noreturn]] void throw_vanishing(double mu, const Partition& lambda) {
  throw NumericError("generalized Pochhammer symbol (mu)_lambda vanishes at mu = " +
                     std::to_string(mu) + ", lambda = " + lambda.to_string());
}

// 1 / ((μ)_λ |λ|!), formed as a running product of 1/((μ + s)·t).
double inverse_pochhammer_factorial(double mu, const Partition& lambda, double alpha) {
  double value = 1.0;
  int t = 0;
  for_each_cell_offset(lambda, alpha, [&](double s) {
    if (is_zero_factor(mu, s)) throw_vanishing(mu, lambda);
    value /= (mu + s) * (++t);
  });
  return value;
}

// μ^{|λ|} / ((μ)_λ |λ|!)
double scaled_inverse_pochhammer_factorial(double mu, const Partition& lambda,
                                           double alpha) {
  double value = 1.0;
  int t = 0;
  for_each_cell_offset(lambda, alpha, [&](double s) {
    if (is_zero_factor(mu, s)) throw_vanishing(mu, lambda);
    value *= mu / ((mu + s) * (++t));
  });
  return value;
}

// μ^{|λ|}/(μ)_λ − 1 without cancellation when every factor is positive.
double scaled_pochhammer_defect(double mu, const Partition& lambda, double alpha) {
  double log_ratio = 0.0;
  bool all_positive = true;
  for_each_cell_offset(lambda, alpha, [&](double s) {
    if (is_zero_factor(mu, s)) throw_vanishing(mu, lambda);
    if (mu + s <= 0.0) all_positive = false;
    else log_ratio -= std::log1p(s / mu);
  });
  if (all_positive) return std::expm1(log_ratio);
  double ratio = 1.0;
  for_each_cell_offset(lambda, alpha, [&](double s) { ratio *= mu / (mu + s); });
  return ratio - 1.0;
}

struct TailEstimate {
  double bound;
  bool rigorous;
};

// Ratio extrapolation of the last two weight sums; used only where no
// rigorous bound is available.
class RatioTail {
 public:
  TailEstimate operator()(double weight_abs) {
    TailEstimate est{kInf, false};
    if (weight_abs == 0.0 && previous_ == 0.0) {
      est.bound = 0.0;
    } else if (previous_ > 0.0) {
      const double r = weight_abs / previous_;
      if (r < 1.0) est.bound = weight_abs * r / (1.0 - r);
    }
    previous_ = weight_abs;
    return est;
  }

 private:
  double previous_ = -1.0;
};

// Weight-major summation. coef(λ, m) multiplies the kernel; tail(m, weight_abs)
// bounds the remainder beyond weight m. `tol_scale` converts abs_tol into the
// units of the summed series (used by the translated ₀F₀).
template <class Coef, class Tail>
SeriesResult sum_by_weight(KernelTable& kernels, const SeriesPolicy& policy, Coef&& coef,
                           Tail&& tail, double tol_scale = 1.0) {
  policy.validate();
  CompensatedSum acc;
  SeriesResult result;
  for (int m = 0; m <= policy.max_weight; ++m) {
    double weight_abs = 0.0;
    for (const auto& term : kernels.weight(m)) {
      const double contribution = coef(term.lambda, m) * term.kernel;
      acc.add(contribution);
      weight_abs += std::abs(contribution);
    }
    const TailEstimate est = tail(m, weight_abs);
    result.value = acc.value();
    result.tail_bound = est.bound;
    result.tail_rigorous = est.rigorous;
    result.weights_summed = m;
    if (est.bound <= policy.rel_tol * std::abs(result.value) + policy.abs_tol / tol_scale) {
      result.converged = true;
      break;
    }
  }
  return result;
}

double regime_k1(double mu, double k2, int n) { return mu - k2 * (n - 1) - 0.5; }

bool in_regime(double mu, double k2, int n) {
  const double k1 = regime_k1(mu, k2, n);
  return k1 >= k2 * (n - 1) - 1e-12 * std::max(1.0, std::abs(mu));
}

double median(std::span<const double> values) {
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

EvalVector shifted(const EvalVector& x, double c) {
  std::vector<double> out(x.coords().begin(), x.coords().end());
  for (double& v : out) v -= c;
  return EvalVector(std::move(out));
}

void require_same_dimension(const EvalVector& x, const EvalVector& y) {
  if (x.size() != y.size())
    throw DomainError("x and y must have the same dimension (" + std::to_string(x.size()) +
                      " vs " + std::to_string(y.size()) + ")");
}

}  // namespace

double gen_pochhammer(double mu, const Partition& lambda, JackParameter alpha) {
  double value = 1.0;
  for_each_cell_offset(lambda, alpha.value(), [&](double s) { value *= mu + s; });
  return value;
}

double tail_bound_0F0(double z, int M) {
  if (M < 0) throw DomainError("tail_bound_0F0: M must be nonnegative");
  if (!(z >= 0.0)) throw DomainError("tail_bound_0F0: norm product must be nonnegative");
  if (z == 0.0) return 0.0;
  // first dropped term z^{M+1}/(M+1)!, then forward summation of the rest
  int m = M + 1;
  double term = std::exp(m * std::log(z) - std::lgamma(m + 1.0));
  if (!std::isfinite(term)) return kInf;
  double sum = 0.0;
  for (;;) {
    sum += term;
    const double r = z / (m + 1);
    if (r < 0.5 && term <= sum * 1e-18) {
      sum += term * r / (1.0 - r);  // geometric bound on what is left
      break;
    }
    term *= r;
    ++m;
    if (term == 0.0) break;
  }
  return std::max(sum, 0.0);
}

double tail_bound_0F0_m2(double z, int M) {
  if (M < 0) throw DomainError("tail_bound_0F0_m2: M must be nonnegative");
  if (!(z >= 0.0)) throw DomainError("tail_bound_0F0_m2: norm product must be nonnegative");
  if (z == 0.0) return 0.0;
  int m = M + 1;
  double base = std::exp(m * std::log(z) - std::lgamma(m + 1.0));  // z^m/m!
  if (!std::isfinite(base)) return kInf;
  double sum = 0.0;
  for (;;) {
    const double term = static_cast<double>(m) * m * base;
    sum += term;
    // ratio of consecutive m² z^m/m! terms is z(m+1)/m², decreasing in m
    const double r = z * (m + 1.0) / (static_cast<double>(m) * m);
    if (r < 0.5 && term <= sum * 1e-18) {
      sum += term * r / (1.0 - r);
      break;
    }
    base *= z / (m + 1);
    ++m;
    if (base == 0.0) break;
  }
  return sum;
}

double pochhammer_ratio_bound(int n, double k2) {
  return std::exp2(n * (n - 1) * (k2 + 1.0) / 2.0);
}

KernelTable::KernelTable(JackParameter alpha, EvalVector x, EvalVector y)
    : x_(alpha, (require_same_dimension(x, y), std::move(x))),
      y_(alpha, std::move(y)),
      ones_(alpha, EvalVector::ones(x_.point().size())),
      norm_product_(x_.point().norm_l1() * y_.point().norm_l1()) {}

void KernelTable::extend_to(int max_weight) {
  if (max_weight < static_cast<int>(by_weight_.size())) return;
  x_.extend_to(max_weight);
  y_.extend_to(max_weight);
  ones_.extend_to(max_weight);
  for (int w = static_cast<int>(by_weight_.size()); w <= max_weight; ++w) {
    const auto lambdas = x_.partitions(w);
    const auto px = x_.P_weight(w), py = y_.P_weight(w), p1 = ones_.P_weight(w);
    std::vector<Term> terms;
    terms.reserve(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const double kernel = c_from_p_factor(lambdas[i], alpha()) * px[i] * (py[i] / p1[i]);
      terms.push_back({lambdas[i], kernel});
    }
    by_weight_.push_back(std::move(terms));
  }
}

std::span<const KernelTable::Term> KernelTable::weight(int m) {
  extend_to(m);
  return by_weight_[m];
}

SeriesResult hyper_0F0(JackParameter alpha, const EvalVector& x, const EvalVector& y,
                       const SeriesPolicy& policy) {
  require_same_dimension(x, y);
  policy.validate();
  const int n = x.size();
  double c = median(x.coords());
  double d = median(y.coords());
  EvalVector xs = shifted(x, c);
  EvalVector ys = shifted(y, d);
  if (xs.norm_l1() * ys.norm_l1() >= x.norm_l1() * y.norm_l1()) {
    c = d = 0.0;
    xs = x;
    ys = y;
  }
  // ₀F₀(x, y) = e^{cΣy' + dΣx' + Ncd} ₀F₀(x', y')
  const double exponent = c * ys.sum() + d * xs.sum() + n * c * d;
  const double scale = std::exp(exponent);

  KernelTable kernels(alpha, xs, ys);
  const double np = kernels.norm_product();
  double inv_fact = 1.0;
  int fact_m = 0;
  auto coef = [&](const Partition&, int m) {
    while (fact_m < m) inv_fact /= ++fact_m;
    return inv_fact;
  };
  auto tail = [&](int m, double) { return TailEstimate{tail_bound_0F0(np, m), true}; };
  SeriesResult r = sum_by_weight(kernels, policy, coef, tail, scale);
  r.value *= scale;
  r.tail_bound *= scale;
  return r;
}

SeriesResult hyper_0F1(JackParameter alpha, double mu, const EvalVector& x,
                       const EvalVector& y, const SeriesPolicy& policy) {
  require_same_dimension(x, y);
  const int n = x.size();
  const double a = alpha.value();
  const double k2 = 1.0 / a;
  const double mu_min = mu - (n - 1) / a;
  KernelTable kernels(alpha, x, y);
  const double np = kernels.norm_product();
  RatioTail fallback;
  auto coef = [&](const Partition& lambda, int) {
    return inverse_pochhammer_factorial(mu, lambda, a);
  };
  auto tail = [&](int m, double weight_abs) {
    const TailEstimate heuristic = fallback(weight_abs);
    if (mu_min <= 0.0) return heuristic;
    double bound = tail_bound_0F0(np / mu_min, m);
    if (in_regime(mu, k2, n))
      bound = std::min(bound, pochhammer_ratio_bound(n, k2) * tail_bound_0F0(np / mu, m));
    return TailEstimate{bound, true};
  };
  return sum_by_weight(kernels, policy, coef, tail);
}

SeriesResult hyper_0F1_one_arg(JackParameter alpha, double mu, const EvalVector& x,
                               const SeriesPolicy& policy) {
  const int n = x.size();
  const double a = alpha.value();
  const double mu_min = mu - (n - 1) / a;
  // kernel at (x, 1) is C_λ(x)
  KernelTable kernels(alpha, x, EvalVector::ones(n));
  const double np = x.norm_l1();
  RatioTail fallback;
  auto coef = [&](const Partition& lambda, int m) {
    const double sign = (m % 2) ? -1.0 : 1.0;
    return sign * inverse_pochhammer_factorial(mu, lambda, a);
  };
  auto tail = [&](int m, double weight_abs) {
    const TailEstimate heuristic = fallback(weight_abs);
    if (mu_min <= 0.0) return heuristic;
    return TailEstimate{tail_bound_0F0(np / mu_min, m), true};
  };
  return sum_by_weight(kernels, policy, coef, tail);
}

SeriesResult hyper_0F1_muscaled(KernelTable& kernels, double mu, const SeriesPolicy& policy) {
  const int n = kernels.dimension();
  const double a = kernels.alpha().value();
  const double k2 = 1.0 / a;
  const double mu_min = mu - (n - 1) / a;
  const double np = kernels.norm_product();
  RatioTail fallback;
  auto coef = [&](const Partition& lambda, int m) {
    const double sign = (m % 2) ? -1.0 : 1.0;
    return sign * scaled_inverse_pochhammer_factorial(mu, lambda, a);
  };
  auto tail = [&](int m, double weight_abs) {
    const TailEstimate heuristic = fallback(weight_abs);
    if (mu_min <= 0.0) return heuristic;
    double bound = tail_bound_0F0(np * mu / mu_min, m);
    if (in_regime(mu, k2, n))
      bound = std::min(bound, pochhammer_ratio_bound(n, k2) * tail_bound_0F0(np, m));
    return TailEstimate{bound, true};
  };
  return sum_by_weight(kernels, policy, coef, tail);
}

SeriesResult hyper_0F1_muscaled(JackParameter alpha, double mu, const EvalVector& u,
                                const EvalVector& v, const SeriesPolicy& policy) {
  KernelTable kernels(alpha, u, v);
  return hyper_0F1_muscaled(kernels, mu, policy);
}

SeriesResult muscaled_difference(KernelTable& kernels, double mu, const SeriesPolicy& policy) {
  const int n = kernels.dimension();
  const double a = kernels.alpha().value();
  const double k2 = 1.0 / a;
  const double k1 = regime_k1(mu, k2, n);
  const double mu_min = mu - (n - 1) / a;
  const double np = kernels.norm_product();
  const double ratio_bound = pochhammer_ratio_bound(n, k2);
  RatioTail fallback;
  double inv_fact = 1.0;
  int fact_m = 0;
  auto coef = [&](const Partition& lambda, int m) {
    while (fact_m < m) inv_fact /= ++fact_m;
    if (m < 2) return 0.0;  // (μ)_λ = μ^{|λ|} for |λ| ≤ 1
    const double sign = (m % 2) ? -1.0 : 1.0;
    return sign * scaled_pochhammer_defect(mu, lambda, a) * inv_fact;
  };
  auto tail = [&](int m, double weight_abs) {
    const TailEstimate heuristic = fallback(weight_abs);
    if (mu_min <= 0.0) return heuristic;
    // |ρ − 1| ≤ max(ρ, 1) with ρ ≤ (μ/μ_min)^m
    double bound = tail_bound_0F0(np * mu / mu_min, m) + tail_bound_0F0(np, m);
    if (in_regime(mu, k2, n)) {
      bound = std::min(bound, ratio_bound * tail_bound_0F0(np, m));
      if (k1 > 0.0) {
        // |ρ − 1| ≤ (1/3)·2^{N(N−1)(k₂+1)/2}(1 + k₂(N−1))|λ|²/k₁
        const double lemma = ratio_bound * (1.0 + k2 * (n - 1)) / (3.0 * k1);
        bound = std::min(bound, lemma * tail_bound_0F0_m2(np, m));
      }
    }
    return TailEstimate{bound, true};
  };
  return sum_by_weight(kernels, policy, coef, tail);
}

}  // namespace dunkl
