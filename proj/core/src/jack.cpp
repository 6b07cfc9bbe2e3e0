#include "dunkl/jack.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>
#include <stdexcept>

#include "dunkl/errors.hpp"

namespace dunkl {

JackParameter::JackParameter(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw DomainError("Jack parameter alpha must be positive and finite");
}

JackParameter JackParameter::from_multiplicity(double k2) {
  if (!(k2 > 0.0)) throw DomainError("alpha = 1/k2 requires k2 > 0");
  return JackParameter(1.0 / k2);
}

JackParameter JackParameter::from_cone_dimension(int d) {
  if (d != 1 && d != 2 && d != 4) throw DomainError("cone dimension d must be 1, 2 or 4");
  return JackParameter(2.0 / d);
}

EvalVector::EvalVector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("argument vector must have at least one coordinate");
  for (double c : coords_)
    if (!std::isfinite(c)) throw DomainError("argument vector has a non-finite coordinate");
}

EvalVector EvalVector::squared() const {
  std::vector<double> out(coords_);
  for (double& c : out) c *= c;
  return EvalVector(std::move(out));
}

EvalVector EvalVector::scaled(double t) const {
  std::vector<double> out(coords_);
  for (double& c : out) c *= t;
  return EvalVector(std::move(out));
}

double EvalVector::norm() const {
  double s = 0.0;
  for (double c : coords_) s += c * c;
  return std::sqrt(s);
}

double EvalVector::norm_l1() const {
  double s = 0.0;
  for (double c : coords_) s += std::abs(c);
  return s;
}

double EvalVector::sum() const {
  double s = 0.0;
  for (double c : coords_) s += c;
  return s;
}

EvalVector EvalVector::ones(int n) { return EvalVector(std::vector<double>(n, 1.0)); }
EvalVector EvalVector::zeros(int n) { return EvalVector(std::vector<double>(n, 0.0)); }

namespace {

// Hooks of cell (row, col), 0-based: arm a = λ_row − col − 1, leg l = λ'_col − row − 1.
// upper h* = l + α(a+1), lower h_* = l + 1 + αa.
struct Hooks {
  double upper;
  double lower;
};

Hooks hooks(const Partition& lambda, const Partition& conj, int row, int col, double alpha) {
  const int arm = lambda[row] - col - 1;
  const int leg = conj[col] - row - 1;
  return {leg + alpha * (arm + 1), leg + 1 + alpha * arm};
}

void strips_into(const Partition& lambda, int n, std::size_t row, std::vector<int>& parts,
                 std::vector<Partition>& out) {
  // μ_row ∈ [λ_{row+1}, λ_row] for row < n−1; μ_{n−1} = 0
  if (row + 1 >= static_cast<std::size_t>(n)) {
    out.emplace_back(parts);
    return;
  }
  for (int v = lambda[row]; v >= lambda[row + 1]; --v) {
    parts.push_back(v);
    strips_into(lambda, n, row + 1, parts, out);
    parts.pop_back();
  }
}

std::vector<Partition> horizontal_strips(const Partition& lambda, int n) {
  std::vector<Partition> out;
  std::vector<int> parts;
  strips_into(lambda, n, 0, parts, out);
  return out;
}

}  // namespace

double c_from_p_factor(const Partition& lambda, JackParameter alpha) {
  const double a = alpha.value();
  const Partition conj = lambda.conjugate();
  double factor = 1.0;
  int t = 0;
  for (int row = 0; row < lambda.length(); ++row)
    for (int col = 0; col < lambda[row]; ++col)
      factor *= a * (++t) / hooks(lambda, conj, row, col, a).upper;
  return factor;
}

double branching_coefficient(const Partition& lambda, const Partition& mu,
                             JackParameter alpha) {
  // Π_{i≤j<ℓ(μ)} of Gamma-function ratios; along row i they collapse to
  // Pochhammer quotients of length d_i = λ_i − μ_i
  const double a = alpha.value();
  const int len = mu.length();
  double psi = 1.0;
  for (int i = 0; i < len; ++i) {
    const int d = lambda[i] - mu[i];
    if (d == 0) continue;
    for (int j = i; j < len; ++j) {
      const double b = (j - i) / a;
      const double b1 = (j - i + 1) / a;
      const double a1 = mu[i] - mu[j];
      const double a4 = mu[i] - lambda[j + 1];
      for (int t = 0; t < d; ++t)
        psi *= (a4 + 1 + b + t) / (a1 + 1 + b + t) * (a1 + b1 + t) / (a4 + b1 + t);
    }
  }
  return psi;
}

namespace detail {

// Strip lists for one (α, N): for each level n ≤ N and weight w, the
// partitions of w with ≤ n parts and, for each, the μ one level down with
// λ/μ a horizontal strip.
class JackBranching {
 public:
  struct Term {
    std::int32_t mu_index;  // into level n−1, weight w − strip
    std::int32_t strip;     // |λ/μ|
    double psi;
  };
  struct Block {
    std::vector<Partition> partitions;
    std::vector<std::vector<Term>> terms;
    std::unordered_map<Partition, int, PartitionHash> index;
    std::vector<double> c_factor;  // filled at the top level only
  };

  JackBranching(JackParameter alpha, int n) : alpha_(alpha), n_(n), blocks_(n + 1) {
    for (int level = 0; level <= n_; ++level) add_block(level, 0);
  }

  static std::shared_ptr<JackBranching> shared(JackParameter alpha, int n) {
    static std::mutex mutex;
    static std::map<std::pair<double, int>, std::shared_ptr<JackBranching>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[{alpha.value(), n}];
    if (!slot) slot = std::make_shared<JackBranching>(alpha, n);
    return slot;
  }

  // Blocks of weight ≤ w for every level; returns pointers stable for the
  // lifetime of this object.
  std::vector<const Block*> blocks_at(int level, int w) {
    const std::lock_guard lock(mutex_);
    while (weights_ <= w) {
      for (int l = 0; l <= n_; ++l) add_block(l, weights_);
      ++weights_;
    }
    std::vector<const Block*> out;
    for (int v = 0; v <= w; ++v) out.push_back(&blocks_[level][v]);
    return out;
  }

 private:
  void add_block(int level, int w) {
    auto& column = blocks_[level];
    if (static_cast<int>(column.size()) > w) return;
    Block block;
    if (level == 0) {
      if (w == 0) block.partitions.emplace_back();
    } else {
      block.partitions = enumerate_partitions(w, level);
    }
    for (std::size_t i = 0; i < block.partitions.size(); ++i)
      block.index.emplace(block.partitions[i], static_cast<int>(i));
    if (level > 0) {
      for (const Partition& lambda : block.partitions) {
        std::vector<Term> terms;
        for (const Partition& mu : horizontal_strips(lambda, level)) {
          const int strip = w - mu.weight();
          const auto& below = blocks_[level - 1][w - strip].index;
          const auto it = below.find(mu);
          if (it == below.end()) continue;  // ℓ(μ) > level − 1
          terms.push_back({it->second, strip, branching_coefficient(lambda, mu, alpha_)});
        }
        block.terms.push_back(std::move(terms));
      }
    }
    if (level == n_)
      for (const Partition& lambda : block.partitions)
        block.c_factor.push_back(c_from_p_factor(lambda, alpha_));
    column.push_back(std::move(block));
  }

  JackParameter alpha_;
  int n_;
  int weights_ = 1;
  std::mutex mutex_;
  // deque keeps element addresses stable while new weights are appended
  std::vector<std::deque<Block>> blocks_;
};

}  // namespace detail

JackEvaluator::JackEvaluator(JackParameter alpha, EvalVector x, int max_weight)
    : alpha_(alpha),
      x_(std::move(x)),
      branching_(detail::JackBranching::shared(alpha, x_.size())),
      p_(x_.size() + 1),
      c_{{1.0}} {
  for (auto& level : p_) level.push_back({1.0});
  extend_to(max_weight);
}

void JackEvaluator::extend_to(int max_weight) {
  const int n_max = x_.size();
  if (max_weight <= max_weight_) return;
  for (int n = 1; n <= n_max; ++n) {
    const auto blocks = branching_->blocks_at(n, max_weight);
    const double xn = x_[n - 1];
    std::vector<double> powers(max_weight + 1, 1.0);
    for (int e = 1; e <= max_weight; ++e) powers[e] = powers[e - 1] * xn;
    for (int w = max_weight_ + 1; w <= max_weight; ++w) {
      const auto& block = *blocks[w];
      std::vector<double> values(block.partitions.size());
      for (std::size_t i = 0; i < values.size(); ++i) {
        double v = 0.0;
        for (const auto& t : block.terms[i])
          v += p_[n - 1][w - t.strip][t.mu_index] * powers[t.strip] * t.psi;
        values[i] = v;
      }
      if (n == n_max) {
        std::vector<double> c(values.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = values[i] * block.c_factor[i];
        c_.push_back(std::move(c));
      }
      p_[n].push_back(std::move(values));
    }
  }
  // level 0 holds only the empty partition
  for (int w = max_weight_ + 1; w <= max_weight; ++w) p_[0].emplace_back();
  max_weight_ = max_weight;
}

int JackEvaluator::index_of(const Partition& lambda) const {
  if (lambda.length() > x_.size())
    throw DomainError("partition " + lambda.to_string() + " has more parts than the " +
                      std::to_string(x_.size()) + " variables");
  if (lambda.weight() > max_weight_)
    throw std::out_of_range("Jack table populated only up to weight " +
                            std::to_string(max_weight_));
  const auto blocks = branching_->blocks_at(x_.size(), lambda.weight());
  return blocks[lambda.weight()]->index.at(lambda);
}

double JackEvaluator::P(const Partition& lambda) const {
  return p_.back()[lambda.weight()][index_of(lambda)];
}

double JackEvaluator::C(const Partition& lambda) const {
  return c_[lambda.weight()][index_of(lambda)];
}

std::span<const Partition> JackEvaluator::partitions(int w) const {
  if (w < 0 || w > max_weight_)
    throw std::out_of_range("Jack table populated only up to weight " +
                            std::to_string(max_weight_));
  return branching_->blocks_at(x_.size(), w)[w]->partitions;
}

std::span<const double> JackEvaluator::P_weight(int w) const {
  if (w < 0 || w > max_weight_)
    throw std::out_of_range("Jack table populated only up to weight " +
                            std::to_string(max_weight_));
  return p_.back()[w];
}

std::span<const double> JackEvaluator::C_weight(int w) const {
  if (w < 0 || w > max_weight_)
    throw std::out_of_range("Jack table populated only up to weight " +
                            std::to_string(max_weight_));
  return c_[w];
}

double jack_C(const Partition& lambda, JackParameter alpha, const EvalVector& x) {
  if (lambda.length() > x.size())
    throw DomainError("partition " + lambda.to_string() + " has more parts than the " +
                      std::to_string(x.size()) + " variables");
  return JackEvaluator(alpha, x, lambda.weight()).C(lambda);
}

double jack_C_ones(const Partition& lambda, JackParameter alpha, int n) {
  if (n < 1) throw DomainError("number of variables must be positive");
  return jack_C(lambda, alpha, EvalVector::ones(n));
}

double jack_ratio_product(const Partition& lambda, JackParameter alpha, const EvalVector& x,
                          const EvalVector& y) {
  if (x.size() != y.size()) throw DomainError("x and y must have the same dimension");
  if (lambda.length() > x.size())
    throw DomainError("partition " + lambda.to_string() + " has more parts than the " +
                      std::to_string(x.size()) + " variables");
  const int w = lambda.weight();
  const JackEvaluator ex(alpha, x, w);
  const JackEvaluator ey(alpha, y, w);
  const JackEvaluator e1(alpha, EvalVector::ones(x.size()), w);
  // C(x)C(y)/C(1) = f·P(x)P(y)/P(1)
  return c_from_p_factor(lambda, alpha) * ex.P(lambda) * (ey.P(lambda) / e1.P(lambda));
}

double jack_C_ones_closed_form(const Partition& lambda, JackParameter alpha, int n) {
  if (lambda.length() > n)
    throw DomainError("partition " + lambda.to_string() + " has more parts than " +
                      std::to_string(n) + " variables");
  const double a = alpha.value();
  const Partition conj = lambda.conjugate();
  double value = 1.0;
  int t = 0;
  for (int row = 0; row < lambda.length(); ++row) {
    for (int col = 0; col < lambda[row]; ++col) {
      const Hooks h = hooks(lambda, conj, row, col, a);
      value *= a * (++t) * (n - row + a * col) / (h.upper * h.lower);
    }
  }
  return value;
}

}  // namespace dunkl
