#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dunkl/bessel.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/jack_exact.hpp"
#include "dunkl/report_json.hpp"
#include "dunkl/verify.hpp"

namespace dunkl::cli {

namespace {

struct Flags {
  std::string subject;
  std::optional<std::string> alpha, lambda, x, y, mu, k1;
  std::optional<double> k2, t, ceiling, x_max, max_norm_product;
  std::optional<int> n, d, points, max_weight;
  std::uint64_t seed = 1;
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  double half_width = 1.5;
  bool imag_y = false;
  bool imag = false;
  bool exact = false;
  bool csv = false;
  std::string out;
};

double parse_real(const std::string& text, const char* flag) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v))
    throw DomainError(std::string("--") + flag + ": '" + text + "' is not a finite number");
  return v;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(item);
  return items;
}

std::vector<double> parse_reals(const std::string& text, const char* flag) {
  std::vector<double> out;
  for (const std::string& item : split(text)) out.push_back(parse_real(item, flag));
  if (out.empty()) throw DomainError(std::string("--") + flag + " is empty");
  return out;
}

template <class T>
const T& need(const std::optional<T>& value, const char* flag, const std::string& subject) {
  if (!value) throw DomainError(subject + " requires --" + flag);
  return *value;
}

SeriesPolicy policy_from(const Flags& f, int default_weight = SeriesPolicy{}.max_weight) {
  SeriesPolicy p;
  p.max_weight = f.max_weight.value_or(default_weight);
  p.rel_tol = f.rel_tol;
  p.abs_tol = f.abs_tol;
  p.validate();
  return p;
}

void echo_policy(std::vector<std::pair<std::string, InputValue>>& inputs,
                 const SeriesPolicy& p) {
  inputs.emplace_back("max_weight", std::int64_t{p.max_weight});
  inputs.emplace_back("rel_tol", p.rel_tol);
  inputs.emplace_back("abs_tol", p.abs_tol);
  inputs.emplace_back("policy", policy_id(p));
}

void put_series(OutputRecord& rec, const SeriesResult& r) {
  rec.outputs.emplace_back("value", r.value);
  rec.outputs.emplace_back("tail_bound", r.tail_bound);
  rec.outputs.emplace_back("weights_summed", std::int64_t{r.weights_summed});
  rec.outputs.emplace_back("converged", r.converged);
  rec.outputs.emplace_back("tail_rigorous", r.tail_rigorous);
}

std::string rational_string(const exact::Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

OutputRecord eval_jack(const Flags& f) {
  OutputRecord rec{"eval jack", {}, {}};
  const std::vector<double> xs = parse_reals(need(f.x, "x", "eval jack"), "x");
  const Partition lambda = parse_partition(need(f.lambda, "lambda", "eval jack"));
  std::optional<JackParameter> alpha;
  if (f.alpha)
    alpha = JackParameter(parse_real(*f.alpha, "alpha"));
  else if (f.k2)
    alpha = JackParameter::from_multiplicity(*f.k2);
  else
    throw DomainError("eval jack requires --alpha or --k2");
  rec.inputs = {{"alpha", alpha->value()},
                {"lambda", lambda.to_string()},
                {"x", xs},
                {"exact", f.exact}};
  const EvalVector x(xs);
  const JackEvaluator ev(*alpha, x, lambda.weight());
  rec.outputs.emplace_back("value", ev.C(lambda));
  rec.outputs.emplace_back("monic_value", ev.P(lambda));
  if (f.exact) {
    if (!f.alpha) throw DomainError("eval jack --exact requires --alpha");
    const exact::Rational a = exact::parse_rational(*f.alpha);
    std::vector<exact::Rational> xq;
    for (const std::string& item : split(*f.x)) xq.push_back(exact::parse_rational(item));
    const exact::Polynomial poly = exact::jack_c_expansion(lambda, a, x.size());
    rec.outputs.emplace_back("value_exact", rational_string(exact::evaluate(poly, xq)));
    rec.outputs.emplace_back("expansion", RawJson{exact::to_json(poly)});
  }
  return rec;
}

OutputRecord eval_besselA(const Flags& f) {
  OutputRecord rec{"eval besselA", {}, {}};
  const double k2 = need(f.k2, "k2", "eval besselA");
  const std::vector<double> xs = parse_reals(need(f.x, "x", "eval besselA"), "x");
  const std::vector<double> ys = parse_reals(need(f.y, "y", "eval besselA"), "y");
  const SeriesPolicy policy = policy_from(f);
  rec.inputs = {{"k2", k2}, {"x", xs}, {"y", ys}};
  echo_policy(rec.inputs, policy);
  put_series(rec, besselA(k2, EvalVector(xs), EvalVector(ys), policy));
  return rec;
}

OutputRecord eval_besselB(const Flags& f) {
  OutputRecord rec{"eval besselB", {}, {}};
  const double k1 = parse_real(need(f.k1, "k1", "eval besselB"), "k1");
  const double k2 = need(f.k2, "k2", "eval besselB");
  const std::vector<double> xs = parse_reals(need(f.x, "x", "eval besselB"), "x");
  const std::vector<double> ys = parse_reals(need(f.y, "y", "eval besselB"), "y");
  const int n = f.n.value_or(static_cast<int>(xs.size()));
  const SeriesPolicy policy = policy_from(f);
  const MultiplicityB mult(k1, k2, n);
  rec.inputs = {{"k1", k1}, {"k2", k2}, {"N", std::int64_t{n}},
                {"x", xs},  {"y", ys},  {"imag_y", f.imag_y}};
  echo_policy(rec.inputs, policy);
  const EvalVector x(xs), y(ys);
  put_series(rec, f.imag_y ? besselB_at_imag(mult, x, y, policy) : besselB(mult, x, y, policy));
  rec.outputs.emplace_back("mu", mult.mu());
  return rec;
}

OutputRecord eval_j1d(const Flags& f) {
  OutputRecord rec{"eval j1d", {}, {}};
  const double alpha = parse_real(need(f.alpha, "alpha", "eval j1d"), "alpha");
  const double t = need(f.t, "t", "eval j1d");
  rec.inputs = {{"alpha", alpha}, {"t", t}, {"imag", f.imag}};
  rec.outputs.emplace_back("value", f.imag ? bessel_j_imag(alpha, t) : bessel_j(alpha, t));
  return rec;
}

OutputRecord eval_cone(const Flags& f) {
  OutputRecord rec{"eval cone", {}, {}};
  const double mu = parse_real(need(f.mu, "mu", "eval cone"), "mu");
  const int d = need(f.d, "d", "eval cone");
  const std::vector<double> eig = parse_reals(need(f.x, "x", "eval cone"), "x");
  const SeriesPolicy policy = policy_from(f);
  rec.inputs = {{"mu", mu}, {"d", std::int64_t{d}}, {"x", eig}};
  echo_policy(rec.inputs, policy);
  put_series(rec, cone_bessel(mu, d, EvalVector(eig), policy));
  return rec;
}

OutputRecord eval_hc(const Flags& f) {
  OutputRecord rec{"eval hc-oracle", {}, {}};
  const std::vector<double> xs = parse_reals(need(f.x, "x", "eval hc-oracle"), "x");
  const std::vector<double> ys = parse_reals(need(f.y, "y", "eval hc-oracle"), "y");
  rec.inputs = {{"x", xs}, {"y", ys}};
  rec.outputs.emplace_back("value", harish_chandra_0F0(EvalVector(xs), EvalVector(ys)));
  return rec;
}

int run_eval(const Flags& f, std::ostream& out) {
  OutputRecord rec;
  if (f.subject == "jack") rec = eval_jack(f);
  else if (f.subject == "besselA") rec = eval_besselA(f);
  else if (f.subject == "besselB") rec = eval_besselB(f);
  else if (f.subject == "j1d") rec = eval_j1d(f);
  else if (f.subject == "cone") rec = eval_cone(f);
  else rec = eval_hc(f);
  out << to_json_line(rec) << '\n';
  return 0;
}

VerificationReport verify_sweep(const Flags& f, SweepKind kind) {
  SweepConfig config;
  config.kind = kind;
  config.n = f.n.value_or(2);
  config.k2 = need(f.k2, "k2", "verify " + f.subject);
  config.mu_grid = parse_reals(f.mu.value_or("10,100,1000,10000"), "mu");
  config.policy = policy_from(f);
  config.seed = f.seed;
  config.ceiling = f.ceiling.value_or(std::numeric_limits<double>::infinity());
  PointBox box;
  box.half_width = f.half_width;
  box.max_norm_product = f.max_norm_product.value_or(box.max_norm_product);
  config.points = random_points(config.n, f.points.value_or(25), f.seed, box);
  VerificationReport report = run_sweep(config);
  report.inputs.emplace_back("box_half_width", box.half_width);
  report.inputs.emplace_back("small_fraction", box.small_fraction);
  report.inputs.emplace_back("small_max", box.small_max);
  report.inputs.emplace_back("max_norm_product", box.max_norm_product);
  return report;
}

int run_verify(const Flags& f, std::ostream& out) {
  VerificationReport report;
  if (f.subject == "prop11") {
    report = verify_sweep(f, SweepKind::prop11);
  } else if (f.subject == "prop12") {
    report = verify_sweep(f, SweepKind::prop12);
  } else if (f.subject == "conjecture") {
    report = verify_sweep(f, SweepKind::conjecture);
  } else if (f.subject == "lemma31") {
    const JackParameter alpha(parse_real(need(f.alpha, "alpha", "verify lemma31"), "alpha"));
    report = lemma31_sweep(f.n.value_or(2), alpha, f.max_weight.value_or(8),
                           f.points.value_or(100), f.seed);
  } else if (f.subject == "lemma32") {
    const int n = f.n.value_or(2);
    const double k2 = need(f.k2, "k2", "verify lemma32");
    std::vector<double> k1_grid;
    if (f.k1) {
      k1_grid = parse_reals(*f.k1, "k1");
    } else {
      // the lemma assumes k1 >= k2(N-1); grid values below the edge are dropped
      for (double k1 : {k2 * (n - 1), 2.0, 10.0, 100.0})
        if (k1 > 0.0 && k1 >= k2 * (n - 1)) k1_grid.push_back(k1);
    }
    report = lemma32_sweep(n, k2, k1_grid, f.max_weight.value_or(8));
  } else {
    report = onedim_sweep(parse_reals(f.mu.value_or("4,16,64,256"), "mu"),
                          f.points.value_or(200), f.x_max.value_or(10.0),
                          f.ceiling.value_or(std::numeric_limits<double>::infinity()));
  }

  const std::string text = f.csv ? to_csv(report) : to_json(report) + '\n';
  if (f.out.empty() || f.out == "-") {
    out << text;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) throw DomainError("cannot open --out file '" + f.out + "'");
    file << text;
    if (!file) throw NumericError("failed writing '" + f.out + "'");
  }
  if (report.informational) return 0;
  return report.pass ? 0 : 1;
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--alpha", f.alpha, "Jack parameter or Bessel index");
  cmd->add_option("--lambda", f.lambda, "partition, e.g. 3,1");
  cmd->add_option("--x", f.x, "comma-separated coordinates");
  cmd->add_option("--y", f.y, "comma-separated coordinates");
  cmd->add_option("--mu", f.mu, "mu value, or grid for verify");
  cmd->add_option("--k1", f.k1, "multiplicity k1 (grid for verify lemma32)");
  cmd->add_option("--k2", f.k2, "multiplicity k2");
  cmd->add_option("--N", f.n, "dimension");
  cmd->add_option("--max-weight", f.max_weight, "largest partition weight summed");
  cmd->add_option("--rel-tol", f.rel_tol, "relative truncation tolerance")->capture_default_str();
  cmd->add_option("--abs-tol", f.abs_tol, "absolute truncation tolerance")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jack-series Dunkl-Bessel functions and bound verification", "dunkl"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  Flags f;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function value");
  eval->add_option("subject", f.subject, "what to evaluate")
      ->required()
      ->check(CLI::IsMember({"jack", "besselA", "besselB", "j1d", "cone", "hc-oracle"}));
  add_common(eval, f);
  eval->add_option("--t", f.t, "argument of j1d");
  eval->add_option("--d", f.d, "cone dimension (1, 2 or 4)");
  eval->add_flag("--imag-y", f.imag_y, "evaluate besselB at (x, iy)");
  eval->add_flag("--imag", f.imag, "evaluate j1d at it");
  eval->add_flag("--exact", f.exact, "also print the exact rational expansion (jack)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("subject", f.subject, "which estimate to check")
      ->required()
      ->check(CLI::IsMember({"prop11", "prop12", "lemma31", "lemma32", "onedim", "conjecture"}));
  add_common(verify, f);
  verify->add_option("--seed", f.seed, "random seed")->capture_default_str();
  verify->add_option("--points", f.points, "number of points (grid size for onedim)");
  verify->add_option("--ceiling", f.ceiling, "pass threshold for the empirical constant");
  verify->add_option("--x-max", f.x_max, "grid end for onedim");
  verify->add_option("--box-half-width", f.half_width, "coordinate range [-w, w]")
      ->capture_default_str();
  verify->add_option("--max-norm-product", f.max_norm_product, "reject |x||y| above this");
  verify->add_option("--out", f.out, "report file (default stdout)");
  verify->add_flag("--csv", f.csv, "emit CSV records instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return run_eval(f, out);
    return run_verify(f, out);
  } catch (const DomainError& e) {
    err << "dunkl: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "dunkl: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dunkl::cli
