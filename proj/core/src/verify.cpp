#include "dunkl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dunkl/errors.hpp"

namespace dunkl {

std::uint64_t SeededUniform::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SeededUniform::uniform(double lo, double hi) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

namespace {

EvalPoint draw_point(SeededUniform& rng, int n, double half_width) {
  std::vector<double> x(n), y(n);
  for (double& v : x) v = rng.uniform(-half_width, half_width);
  for (double& v : y) v = rng.uniform(-half_width, half_width);
  return {EvalVector(std::move(x)), EvalVector(std::move(y))};
}

// Rescales x and y by the same factor so that |x||y| = target.
EvalPoint rescaled(const EvalPoint& pt, double target) {
  const double s = std::sqrt(target / pt.norm_product());
  return {pt.x.scaled(s), pt.y.scaled(s)};
}

void require_positive_count(int count) {
  if (count < 1) throw DomainError("point count must be at least 1");
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

bool allowed_prop12_k2(double k2) {
  return k2 == 0.0 || k2 == 0.5 || k2 == 1.0 || k2 == 2.0;
}

std::vector<double> coords_of(const EvalVector& v) {
  return {v.coords().begin(), v.coords().end()};
}

// log(μ^{|λ|}/(μ)_λ); requires every factor μ + s to be positive.
double log_pochhammer_ratio(double mu, const Partition& lambda, double alpha) {
  double out = 0.0;
  for (int row = 0; row < lambda.length(); ++row)
    for (int col = 0; col < lambda[row]; ++col) out -= std::log1p((col - row / alpha) / mu);
  return out;
}

// E for k₂ = 0: the symmetrized products differ by
// Π a_l − Π b_l = Σ_l (a_l − b_l) Π_{i<l} a_i Π_{i>l} b_i per permutation,
// with a_l − b_l the rank-one difference.
double closed_form_error(const MultiplicityB& mult, const EvalPoint& pt) {
  const int n = mult.n();
  const double mu = mult.mu();
  const double index = mult.k1() - 0.5;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  double total = 0.0;
  double perms = 0.0;
  do {
    std::vector<double> a(n), b(n), d(n);
    for (int l = 0; l < n; ++l) {
      const double s = pt.x[w[l]] * pt.y[l];
      a[l] = bessel_j(index, 2.0 * std::sqrt(mu) * s);
      b[l] = std::exp(-s * s);
      d[l] = onedim_scaled_diff(mu, s);
    }
    for (int l = 0; l < n; ++l) {
      double term = d[l];
      for (int i = 0; i < l; ++i) term *= a[i];
      for (int i = l + 1; i < n; ++i) term *= b[i];
      total += term;
    }
    perms += 1.0;
  } while (std::next_permutation(w.begin(), w.end()));
  return std::abs(total / perms);
}

double prop11_denominator(const EvalPoint& pt) {
  const double p2 = std::pow(pt.norm_product(), 2);
  return p2 * p2 * std::exp(p2);
}

double prop12_denominator(const EvalPoint& pt) {
  const double p2 = std::pow(pt.norm_product(), 2);
  return std::min(p2 * p2, 1.0);
}

double safe_ratio(double mu, double error, double denominator) {
  return denominator > 0.0 ? mu * error / denominator : 0.0;
}

void finish_orders(VerificationReport& report) {
  std::vector<double> present;
  for (const auto& o : report.order_per_point)
    if (o) present.push_back(*o);
  if (!present.empty()) report.order_median = median_of(std::move(present));
}

}  // namespace

std::vector<EvalPoint> random_points(int n, int count, std::uint64_t seed,
                                     const PointBox& box) {
  if (n < 1) throw DomainError("dimension N must be at least 1");
  require_positive_count(count);
  if (!(box.half_width > 0.0)) throw DomainError("point box half width must be positive");
  SeededUniform rng(seed);
  const int period =
      box.small_fraction > 0.0 ? std::max(1, static_cast<int>(std::lround(1.0 / box.small_fraction)))
                               : 0;
  std::vector<EvalPoint> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    EvalPoint pt = draw_point(rng, n, box.half_width);
    const double np = pt.norm_product();
    if (np == 0.0 || np > box.max_norm_product) continue;
    const int index = static_cast<int>(out.size());
    if (period > 0 && index % period == period - 1)
      pt = rescaled(pt, rng.uniform(box.small_max / 5.0, box.small_max));
    out.push_back(std::move(pt));
  }
  return out;
}

std::vector<EvalPoint> band_points(int n, int count, std::uint64_t seed, double lo, double hi) {
  if (n < 1) throw DomainError("dimension N must be at least 1");
  require_positive_count(count);
  if (!(lo > 0.0 && hi >= lo)) throw DomainError("band requires 0 < lo <= hi");
  SeededUniform rng(seed);
  std::vector<EvalPoint> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    EvalPoint pt = draw_point(rng, n, PointBox{}.half_width);
    if (pt.norm_product() < 1e-3) continue;
    out.push_back(rescaled(pt, rng.uniform(lo, hi)));
  }
  return out;
}

const char* to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::prop11: return "prop11";
    case SweepKind::prop12: return "prop12";
    case SweepKind::conjecture: return "conjecture";
  }
  return "unknown";
}

void SweepConfig::validate() const {
  if (n < 1) throw DomainError("dimension N must be at least 1");
  if (!(k2 >= 0.0) || !std::isfinite(k2)) throw DomainError("k2 must be >= 0");
  if (kind == SweepKind::prop11 && k2 == 0.0)
    throw DomainError("prop11 needs k2 > 0; use prop12 for k2 = 0");
  if (kind == SweepKind::prop12 && !allowed_prop12_k2(k2))
    throw DomainError("prop12 requires k2 in {0, 0.5, 1, 2}; use conjecture for other k2");
  if (mu_grid.empty()) throw DomainError("mu grid is empty");
  for (std::size_t i = 1; i < mu_grid.size(); ++i)
    if (!(mu_grid[i] > mu_grid[i - 1])) throw DomainError("mu grid must be strictly increasing");
  for (double mu : mu_grid) {
    const MultiplicityB mult = MultiplicityB::from_mu(mu, k2, n);
    if (!mult.in_proposition_regime())
      throw DomainError("mu = " + std::to_string(mu) + " violates k1 >= k2(N-1)");
  }
  if (points.empty()) throw DomainError("point grid is empty");
  for (const auto& pt : points)
    if (pt.x.size() != n || pt.y.size() != n)
      throw DomainError("point dimension does not match N");
  if (std::isnan(ceiling) || ceiling < 0.0) throw DomainError("ceiling must be >= 0");
  policy.validate();
}

SeriesResult proposition_error(const MultiplicityB& mult, const EvalPoint& pt,
                               const SeriesPolicy& policy) {
  if (!mult.alpha()) {
    if (pt.x.size() != mult.n() || pt.y.size() != mult.n())
      throw DomainError("point dimension does not match N");
    SeriesResult r;
    r.value = closed_form_error(mult, pt);
    r.converged = true;
    return r;
  }
  SeriesResult r = besselB_scaled_diff(mult, pt.x, pt.y, policy);
  r.value = std::abs(r.value);
  return r;
}

double prop11_ratio(const MultiplicityB& mult, const EvalPoint& pt, const SeriesPolicy& policy) {
  if (mult.k2() == 0.0) throw DomainError("prop11 needs k2 > 0");
  const double d = prop11_denominator(pt);
  if (d == 0.0) return 0.0;
  return safe_ratio(mult.mu(), proposition_error(mult, pt, policy).value, d);
}

double prop12_ratio(const MultiplicityB& mult, const EvalPoint& pt, const SeriesPolicy& policy) {
  if (!allowed_prop12_k2(mult.k2())) throw DomainError("prop12 requires k2 in {0, 0.5, 1, 2}");
  const double d = prop12_denominator(pt);
  if (d == 0.0) return 0.0;
  return safe_ratio(mult.mu(), proposition_error(mult, pt, policy).value, d);
}

namespace {

BoundCheck lemma31_from_table(KernelTable& kernels, double norm_sq_product, int m) {
  BoundCheck c;
  for (const auto& term : kernels.weight(m)) c.lhs += term.kernel;
  c.rhs = std::pow(norm_sq_product, m);
  c.pass = c.lhs <= c.rhs * (1.0 + 1e-10);
  return c;
}

}  // namespace

BoundCheck lemma31_check(JackParameter alpha, const EvalVector& x, const EvalVector& y, int m) {
  if (x.size() != y.size()) throw DomainError("x and y must have the same dimension");
  if (m < 0) throw DomainError("weight m must be nonnegative");
  KernelTable kernels(alpha, x.squared(), y.squared());
  return lemma31_from_table(kernels, x.norm() * x.norm() * y.norm() * y.norm(), m);
}

Lemma32Check lemma32_check(int n, double k1, double k2, const Partition& lambda) {
  if (n < 1) throw DomainError("dimension N must be at least 1");
  if (!(k2 > 0.0)) throw DomainError("lemma32 needs k2 > 0");
  if (!(k1 > 0.0)) throw DomainError("lemma32 needs k1 > 0");
  const MultiplicityB mult(k1, k2, n);
  if (!mult.in_proposition_regime()) throw DomainError("lemma32 needs k1 >= k2(N-1)");
  if (lambda.length() > n)
    throw DomainError("partition " + lambda.to_string() + " has more than N parts");
  const double mu = mult.mu();
  const double bound = pochhammer_ratio_bound(n, k2);
  const double log_ratio = log_pochhammer_ratio(mu, lambda, 1.0 / k2);
  const double m = lambda.weight();

  Lemma32Check c;
  c.difference.lhs = std::abs(std::expm1(log_ratio));
  c.difference.rhs = bound * (1.0 + k2 * (n - 1)) * m * m / (3.0 * k1);
  c.difference.pass = c.difference.lhs <= c.difference.rhs * (1.0 + 1e-10);
  c.ratio.lhs = std::exp(log_ratio);
  c.ratio.rhs = bound;
  c.ratio.pass = c.ratio.lhs <= c.ratio.rhs * (1.0 + 1e-10);
  return c;
}

OnedimCheck onedim_check(double mu, const std::vector<double>& xs, double ceiling) {
  if (!(mu > 2.0)) throw DomainError("the one-dimensional estimate needs mu > 2");
  OnedimCheck c;
  for (double x : xs) {
    if (x == 0.0) continue;
    const double e = std::abs(onedim_scaled_diff(mu, 0.5 * x));
    const double x4 = x * x * x * x;
    c.sup_ratio = std::max(c.sup_ratio, mu * e / std::min(x4, 1.0));
  }
  c.pass = std::isfinite(c.sup_ratio) && c.sup_ratio <= ceiling;
  return c;
}

std::optional<double> fit_order(const std::vector<double>& mu, const std::vector<double>& error) {
  if (mu.size() != error.size()) throw DomainError("fit_order: size mismatch");
  if (mu.size() < 2) return std::nullopt;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!(error[i] > 0.0) || !std::isfinite(error[i]) || !(mu[i] > 0.0)) return std::nullopt;
    lx.push_back(std::log(mu[i]));
    ly.push_back(std::log(error[i]));
  }
  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return -sxy / sxx;
}

VerificationReport run_sweep(const SweepConfig& config) {
  config.validate();
  const std::size_t nmu = config.mu_grid.size();
  const std::size_t npt = config.points.size();

  VerificationReport report;
  report.command = std::string("verify ") + to_string(config.kind);
  report.informational = config.kind == SweepKind::conjecture;
  report.policy_id = policy_id(config.policy);
  report.inputs = {
      {"kind", std::string(to_string(config.kind))},
      {"N", std::int64_t{config.n}},
      {"k2", config.k2},
      {"mu", config.mu_grid},
      {"points", static_cast<std::int64_t>(npt)},
      {"seed", static_cast<std::int64_t>(config.seed)},
      {"ceiling", config.ceiling},
      {"max_weight", std::int64_t{config.policy.max_weight}},
      {"rel_tol", config.policy.rel_tol},
      {"abs_tol", config.policy.abs_tol},
      {"informational", report.informational},
  };

  // evaluated point-major so one kernel table serves the whole μ grid
  std::vector<ReportRecord> grid(nmu * npt);
  for (std::size_t p = 0; p < npt; ++p) {
    const EvalPoint& pt = config.points[p];
    std::optional<KernelTable> kernels;
    if (config.k2 > 0.0)
      kernels.emplace(JackParameter::from_multiplicity(config.k2), pt.x.squared(),
                      pt.y.squared());
    const double denominator = config.kind == SweepKind::prop11 ? prop11_denominator(pt)
                                                                : prop12_denominator(pt);
    for (std::size_t i = 0; i < nmu; ++i) {
      const double mu = config.mu_grid[i];
      const MultiplicityB mult = MultiplicityB::from_mu(mu, config.k2, config.n);
      SeriesResult e;
      if (kernels) {
        e = besselB_scaled_diff(mult, *kernels, config.policy);
        e.value = std::abs(e.value);
      } else {
        e = proposition_error(mult, pt, config.policy);
      }
      ReportRecord& r = grid[i * npt + p];
      r.mu = mu;
      r.x = coords_of(pt.x);
      r.y = coords_of(pt.y);
      r.error = e.value;
      r.denominator = denominator;
      r.ratio = safe_ratio(mu, e.value, denominator);
      r.converged = e.converged;
      r.boundary = mult.on_regime_boundary();
    }
  }

  bool all_converged = true;
  for (const auto& r : grid) {
    report.empirical_constant = std::max(report.empirical_constant, r.ratio);
    all_converged = all_converged && r.converged && std::isfinite(r.ratio);
  }
  for (std::size_t p = 0; p < npt; ++p) {
    std::vector<double> errors(nmu);
    for (std::size_t i = 0; i < nmu; ++i) errors[i] = grid[i * npt + p].error;
    report.order_per_point.push_back(fit_order(config.mu_grid, errors));
  }
  finish_orders(report);
  report.records = std::move(grid);
  report.pass = all_converged && report.empirical_constant <= config.ceiling;
  return report;
}

VerificationReport lemma31_sweep(int n, JackParameter alpha, int max_weight, int count,
                                 std::uint64_t seed) {
  if (max_weight < 0) throw DomainError("max weight must be nonnegative");
  PointBox box;
  box.half_width = 2.0;
  box.small_fraction = 0.0;
  box.max_norm_product = std::numeric_limits<double>::infinity();
  const std::vector<EvalPoint> points = random_points(n, count, seed, box);

  VerificationReport report;
  report.command = "verify lemma31";
  report.inputs = {
      {"N", std::int64_t{n}},
      {"alpha", alpha.value()},
      {"max_weight", std::int64_t{max_weight}},
      {"points", std::int64_t{count}},
      {"seed", static_cast<std::int64_t>(seed)},
      {"box_half_width", box.half_width},
      {"slack", 1e-10},
  };
  bool pass = true;
  for (const auto& pt : points) {
    KernelTable kernels(alpha, pt.x.squared(), pt.y.squared());
    const double nsq = std::pow(pt.x.norm() * pt.y.norm(), 2);
    for (int m = 0; m <= max_weight; ++m) {
      const BoundCheck c = lemma31_from_table(kernels, nsq, m);
      ReportRecord r;
      r.x = coords_of(pt.x);
      r.y = coords_of(pt.y);
      r.weight = m;
      r.alpha = alpha.value();
      r.error = c.lhs;
      r.denominator = c.rhs;
      r.ratio = c.rhs > 0.0 ? c.lhs / c.rhs : 0.0;
      r.converged = c.pass;
      report.empirical_constant = std::max(report.empirical_constant, r.ratio);
      pass = pass && c.pass;
      report.records.push_back(std::move(r));
    }
  }
  report.pass = pass;
  return report;
}

VerificationReport lemma32_sweep(int n, double k2, const std::vector<double>& k1_grid,
                                 int max_weight) {
  if (max_weight < 0) throw DomainError("max weight must be nonnegative");
  if (k1_grid.empty()) throw DomainError("k1 grid is empty");
  VerificationReport report;
  report.command = "verify lemma32";
  double ratio_max = 0.0;
  bool pass = true;
  for (double k1 : k1_grid) {
    const MultiplicityB mult(k1, k2, n);
    for (int m = 0; m <= max_weight; ++m) {
      for (const Partition& lambda : enumerate_partitions(m, n)) {
        const Lemma32Check c = lemma32_check(n, k1, k2, lambda);
        ReportRecord r;
        r.mu = mult.mu();
        r.lambda = lambda;
        r.weight = m;
        r.alpha = 1.0 / k2;
        r.error = c.difference.lhs;
        r.denominator = c.difference.rhs;
        r.ratio = c.difference.rhs > 0.0 ? c.difference.lhs / c.difference.rhs : 0.0;
        r.converged = c.pass();
        r.boundary = mult.on_regime_boundary();
        report.empirical_constant = std::max(report.empirical_constant, r.ratio);
        ratio_max = std::max(ratio_max, c.ratio.lhs / c.ratio.rhs);
        pass = pass && c.pass();
        report.records.push_back(std::move(r));
      }
    }
  }
  report.inputs = {
      {"N", std::int64_t{n}},
      {"k2", k2},
      {"k1", k1_grid},
      {"max_weight", std::int64_t{max_weight}},
      {"slack", 1e-10},
      {"pochhammer_ratio_max_over_bound", ratio_max},
  };
  report.pass = pass;
  return report;
}

VerificationReport onedim_sweep(const std::vector<double>& mu_grid, int count, double x_max,
                                double ceiling) {
  require_positive_count(count);
  if (!(x_max > 0.0)) throw DomainError("x_max must be positive");
  if (mu_grid.empty()) throw DomainError("mu grid is empty");
  for (std::size_t i = 1; i < mu_grid.size(); ++i)
    if (!(mu_grid[i] > mu_grid[i - 1])) throw DomainError("mu grid must be strictly increasing");
  for (double mu : mu_grid)
    if (!(mu > 2.0)) throw DomainError("the one-dimensional estimate needs mu > 2");

  VerificationReport report;
  report.command = "verify onedim";
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) xs[i] = x_max * (i + 1) / count;

  std::vector<double> sup_per_mu;
  std::vector<std::vector<double>> errors(count);
  bool all_finite = true;
  for (double mu : mu_grid) {
    double sup = 0.0;
    for (int i = 0; i < count; ++i) {
      const double x = xs[i];
      const double x4 = x * x * x * x;
      ReportRecord r;
      r.mu = mu;
      r.x = {x};
      r.error = std::abs(onedim_scaled_diff(mu, 0.5 * x));
      r.denominator = std::min(x4, 1.0);
      r.ratio = mu * r.error / r.denominator;
      all_finite = all_finite && std::isfinite(r.ratio);
      sup = std::max(sup, r.ratio);
      errors[i].push_back(r.error);
      report.records.push_back(std::move(r));
    }
    sup_per_mu.push_back(sup);
  }
  for (int i = 0; i < count; ++i) report.order_per_point.push_back(fit_order(mu_grid, errors[i]));
  finish_orders(report);
  report.empirical_constant = *std::max_element(sup_per_mu.begin(), sup_per_mu.end());
  const double sup_min = *std::min_element(sup_per_mu.begin(), sup_per_mu.end());
  const double spread = sup_min > 0.0 ? report.empirical_constant / sup_min - 1.0 : 0.0;
  report.inputs = {
      {"mu", mu_grid},
      {"points", std::int64_t{count}},
      {"x_max", x_max},
      {"ceiling", ceiling},
      {"sup_ratio_per_mu", sup_per_mu},
      {"sup_ratio_spread", spread},
  };
  report.pass = all_finite && report.empirical_constant <= ceiling;
  return report;
}

}  // namespace dunkl
