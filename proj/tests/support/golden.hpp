#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace dunkl::testing {

inline nlohmann::json load_data(const std::string& name) {
  std::ifstream in(std::string(DUNKL_TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing test data file " + name);
  return nlohmann::json::parse(in);
}

inline const nlohmann::json& golden() {
  static const nlohmann::json data = load_data("golden.json");
  return data;
}

/// Golden values are stored as decimal strings with 25 digits.
inline double as_double(const nlohmann::json& v) {
  return v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace dunkl::testing
