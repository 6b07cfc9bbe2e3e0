#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dunkl/verify.hpp"

namespace dunkl {

/// Library version string, e.g. "0.3.0".
const char* version();

/// Pre-serialized JSON spliced verbatim into an output record.
struct RawJson {
  std::string text;
};

using OutputValue = std::variant<bool, std::int64_t, double, std::string,
                                 std::vector<double>, RawJson>;

/// One `eval` result line.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, InputValue>> inputs;
  std::vector<std::pair<std::string, OutputValue>> outputs;
};

/// Single-line JSON: {command, inputs, outputs, versions}. Doubles use the
/// shortest representation that round-trips; non-finite values become null.
std::string to_json_line(const OutputRecord& record);

/// Single-line JSON with keys, in order: command, inputs, records,
/// empirical_constant, convergence_order {per_point, median}, pass.
/// inputs.versions carries the library version and numeric policy id.
std::string to_json(const VerificationReport& report);

/// Header line plus one CSV row per record:
/// mu,x,y,lambda,weight,alpha,error,denominator,ratio,converged,boundary
/// with vector-valued cells joined by ';'.
std::string to_csv(const VerificationReport& report);

}  // namespace dunkl
