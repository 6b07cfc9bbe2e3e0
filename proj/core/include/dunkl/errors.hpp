#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Invalid input: bad partition shape, dimension mismatch, parameter out of
/// range. The CLI maps these to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A well-formed input hit a numerical obstruction (vanishing Pochhammer
/// symbol, singular closed form). The CLI maps these to exit code 1.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dunkl
