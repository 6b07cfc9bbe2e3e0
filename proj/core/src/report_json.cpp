#include "dunkl/report_json.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace dunkl {

using nlohmann::ordered_json;

const char* version() { return DUNKL_VERSION_STRING; }

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json vector_json(const std::vector<double>& v) {
  ordered_json out = ordered_json::array();
  for (double d : v) out.push_back(number(d));
  return out;
}

ordered_json input_json(const InputValue& v) {
  return std::visit(overloaded{
                        [](bool b) { return ordered_json(b); },
                        [](std::int64_t i) { return ordered_json(i); },
                        [](double d) { return number(d); },
                        [](const std::string& s) { return ordered_json(s); },
                        [](const std::vector<double>& d) { return vector_json(d); },
                    },
                    v);
}

ordered_json versions_json(const std::string& policy) {
  return ordered_json{{"dunkl", version()}, {"policy", policy}};
}

ordered_json record_json(const ReportRecord& r) {
  ordered_json j;
  if (r.mu) j["mu"] = number(*r.mu);
  j["point"] = {{"x", vector_json(r.x)}, {"y", vector_json(r.y)}};
  if (r.lambda) j["lambda"] = r.lambda->parts();
  if (r.weight) j["weight"] = *r.weight;
  if (r.alpha) j["alpha"] = number(*r.alpha);
  j["error"] = number(r.error);
  j["denominator"] = number(r.denominator);
  j["ratio"] = number(r.ratio);
  j["converged"] = r.converged;
  j["boundary"] = r.boundary;
  return j;
}

std::string shortest(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string joined(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += shortest(v[i]);
  }
  return out;
}

}  // namespace

std::string to_json_line(const OutputRecord& record) {
  ordered_json j;
  j["command"] = record.command;
  ordered_json inputs = ordered_json::object();
  std::string policy = kDefaultPolicyId;
  for (const auto& [key, value] : record.inputs) {
    inputs[key] = input_json(value);
    if (key == "policy" && std::holds_alternative<std::string>(value))
      policy = std::get<std::string>(value);
  }
  j["inputs"] = std::move(inputs);
  ordered_json outputs = ordered_json::object();
  for (const auto& [key, value] : record.outputs) {
    outputs[key] = std::visit(
        overloaded{
            [](bool b) { return ordered_json(b); },
            [](std::int64_t i) { return ordered_json(i); },
            [](double d) { return number(d); },
            [](const std::string& s) { return ordered_json(s); },
            [](const std::vector<double>& d) { return vector_json(d); },
            [](const RawJson& raw) { return ordered_json::parse(raw.text); },
        },
        value);
  }
  j["outputs"] = std::move(outputs);
  j["versions"] = versions_json(policy);
  return j.dump();
}

std::string to_json(const VerificationReport& report) {
  ordered_json j;
  j["command"] = report.command;
  ordered_json inputs = ordered_json::object();
  for (const auto& [key, value] : report.inputs) inputs[key] = input_json(value);
  inputs["versions"] = versions_json(report.policy_id);
  j["inputs"] = std::move(inputs);
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  j["records"] = std::move(records);
  j["empirical_constant"] = number(report.empirical_constant);
  ordered_json per_point = ordered_json::array();
  for (const auto& o : report.order_per_point)
    per_point.push_back(o ? number(*o) : ordered_json(nullptr));
  j["convergence_order"] = {
      {"per_point", std::move(per_point)},
      {"median", report.order_median ? number(*report.order_median) : ordered_json(nullptr)}};
  j["pass"] = report.pass;
  return j.dump();
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "mu,x,y,lambda,weight,alpha,error,denominator,ratio,converged,boundary\n";
  for (const auto& r : report.records) {
    std::string lambda;
    if (r.lambda) {
      for (std::size_t i = 0; i < r.lambda->parts().size(); ++i) {
        if (i) lambda += ';';
        lambda += std::to_string(r.lambda->parts()[i]);
      }
    }
    out += (r.mu ? shortest(*r.mu) : "") + ',' + joined(r.x) + ',' + joined(r.y) + ',' +
           lambda + ',' + (r.weight ? std::to_string(*r.weight) : "") + ',' +
           (r.alpha ? shortest(*r.alpha) : "") + ',' + shortest(r.error) + ',' +
           shortest(r.denominator) + ',' + shortest(r.ratio) + ',' +
           (r.converged ? "true" : "false") + ',' + (r.boundary ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace dunkl
