#pragma once

// Exact-rational Jack polynomials in the monomial basis.
//
// Independent of the floating-point evaluator: P_λ is obtained as the
// eigenvector of the Laplace-Beltrami type operator
//   D = (α/2) Σ_i x_i² ∂_i² + Σ_{i<j} (x_i² ∂_i − x_j² ∂_j)/(x_i − x_j)
// acting on symmetric polynomials in N variables, and the C-normalization is
// solved from the monomial coefficients of (x_1 + … + x_N)^k. Practical for
// weight ≤ 8 and N ≤ 4.

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dunkl/partitions.hpp"

namespace dunkl::exact {

using Rational = boost::multiprecision::cpp_rational;

/// Sparse polynomial: exponent vector (length N) to coefficient.
using Polynomial = std::map<std::vector<int>, Rational>;

/// Monomial symmetric polynomial m_ν in n variables, fully expanded.
Polynomial monomial_symmetric(const Partition& nu, int n);

/// Applies the operator D with parameter α to a symmetric polynomial.
Polynomial apply_laplace_beltrami(const Polynomial& f, const Rational& alpha, int n);

/// C_λ^α for every λ ⊢ k with at most n parts, fully expanded in n variables,
/// keyed by λ.
std::map<Partition, Polynomial> jack_c_expansions(int k, const Rational& alpha, int n);

/// C_λ^α expanded in n variables. Throws DomainError if λ.length() > n.
Polynomial jack_c_expansion(const Partition& lambda, const Rational& alpha, int n);

Rational evaluate(const Polynomial& p, const std::vector<Rational>& x);

/// Exact value of C_λ^α(x).
Rational jack_C_exact(const Partition& lambda, const Rational& alpha,
                      const std::vector<Rational>& x);

/// JSON array of {"exponents": [...], "numerator": "...", "denominator": "..."}
/// sorted by exponent vector, numerators and denominators as decimal strings.
std::string to_json(const Polynomial& p);

/// Parses a decimal ("0.25", "-3", "1e-2") or fraction ("7/3") into an exact
/// rational.
Rational parse_rational(const std::string& text);

}  // namespace dunkl::exact
