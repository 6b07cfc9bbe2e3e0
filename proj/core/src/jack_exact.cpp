#include "dunkl/jack_exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl::exact {

namespace {

void add_term(Polynomial& p, const std::vector<int>& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// g / (x_i − x_j); g must be divisible.
Polynomial divide_by_difference(Polynomial g, int i, int j) {
  Polynomial q;
  while (!g.empty()) {
    auto top = std::max_element(g.begin(), g.end(), [i](const auto& a, const auto& b) {
      return a.first[i] < b.first[i];
    });
    std::vector<int> e = top->first;
    const Rational c = top->second;
    if (e[i] == 0) throw std::logic_error("polynomial not divisible by x_i - x_j");
    g.erase(top);
    --e[i];
    add_term(q, e, c);
    // g −= c·x^e·(x_i − x_j); the x_i part was the erased term
    ++e[j];
    add_term(g, e, c);
  }
  return q;
}

Rational multinomial(const Partition& nu) {
  Rational r = 1;
  int n = 0;
  for (int part : nu.parts())
    for (int t = 1; t <= part; ++t) r = r * (++n) / t;
  return r;
}

}  // namespace

Polynomial monomial_symmetric(const Partition& nu, int n) {
  std::vector<int> e = nu.padded(n);
  std::sort(e.begin(), e.end());
  Polynomial p;
  do {
    p.emplace(e, Rational(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

Polynomial apply_laplace_beltrami(const Polynomial& f, const Rational& alpha, int n) {
  Polynomial out;
  for (const auto& [e, c] : f) {
    Rational diag = 0;
    for (int i = 0; i < n; ++i) diag += Rational(e[i]) * (e[i] - 1);
    add_term(out, e, alpha / 2 * diag * c);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // x_i² ∂_i f − x_j² ∂_j f
      Polynomial g;
      for (const auto& [e, c] : f) {
        if (e[i] > 0) {
          std::vector<int> ei = e;
          ++ei[i];
          add_term(g, ei, c * e[i]);
        }
        if (e[j] > 0) {
          std::vector<int> ej = e;
          ++ej[j];
          add_term(g, ej, -c * e[j]);
        }
      }
      for (const auto& [e, c] : divide_by_difference(std::move(g), i, j)) add_term(out, e, c);
    }
  }
  return out;
}

std::map<Partition, Polynomial> jack_c_expansions(int k, const Rational& alpha, int n) {
  if (n < 1) throw DomainError("number of variables must be positive");
  if (alpha <= 0) throw DomainError("Jack parameter alpha must be positive");
  const std::vector<Partition> basis = enumerate_partitions(k, n);  // lex decreasing
  const std::size_t dim = basis.size();

  // op[r][c] = coefficient of m_basis[r] in D m_basis[c]
  std::vector<std::vector<Rational>> op(dim, std::vector<Rational>(dim, 0));
  for (std::size_t c = 0; c < dim; ++c) {
    const Polynomial image = apply_laplace_beltrami(monomial_symmetric(basis[c], n), alpha, n);
    for (std::size_t r = 0; r < dim; ++r) {
      const auto it = image.find(basis[r].padded(n));
      if (it != image.end()) op[r][c] = it->second;
    }
  }

  // P_λ = Σ_ν u[λ][ν] m_ν, unitriangular in lex order
  std::vector<std::vector<Rational>> u(dim, std::vector<Rational>(dim, 0));
  for (std::size_t l = 0; l < dim; ++l) {
    u[l][l] = 1;
    const Rational eigen = op[l][l];
    for (std::size_t r = l + 1; r < dim; ++r) {
      Rational num = 0;
      for (std::size_t c = l; c < r; ++c) num += op[r][c] * u[l][c];
      const Rational den = eigen - op[r][r];
      if (den == 0) {
        if (num != 0) throw std::logic_error("degenerate eigenvalue in Jack expansion");
        continue;
      }
      u[l][r] = num / den;
    }
  }

  // (x_1 + … + x_n)^k = Σ_λ c_λ P_λ, read off the m_ν coefficients top-down
  std::vector<Rational> scale(dim, 0);
  for (std::size_t r = 0; r < dim; ++r) {
    Rational rest = multinomial(basis[r]);
    for (std::size_t l = 0; l < r; ++l) rest -= scale[l] * u[l][r];
    scale[r] = rest;
  }

  std::map<Partition, Polynomial> out;
  for (std::size_t l = 0; l < dim; ++l) {
    Polynomial p;
    for (std::size_t r = l; r < dim; ++r) {
      if (u[l][r] == 0) continue;
      for (const auto& [e, c] : monomial_symmetric(basis[r], n))
        add_term(p, e, scale[l] * u[l][r] * c);
    }
    out.emplace(basis[l], std::move(p));
  }
  return out;
}

Polynomial jack_c_expansion(const Partition& lambda, const Rational& alpha, int n) {
  if (lambda.length() > n)
    throw DomainError("partition " + lambda.to_string() + " has more parts than " +
                      std::to_string(n) + " variables");
  return jack_c_expansions(lambda.weight(), alpha, n).at(lambda);
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [e, c] : p) {
    if (e.size() != x.size()) throw DomainError("point dimension does not match polynomial");
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int t = 0; t < e[i]; ++t) term *= x[i];
    total += term;
  }
  return total;
}

Rational jack_C_exact(const Partition& lambda, const Rational& alpha,
                      const std::vector<Rational>& x) {
  return evaluate(jack_c_expansion(lambda, alpha, static_cast<int>(x.size())), x);
}

std::string to_json(const Polynomial& p) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [e, c] : p) {
    if (!first) os << ',';
    first = false;
    os << "{\"exponents\":[";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "],\"numerator\":\"" << numerator(c).str() << "\",\"denominator\":\""
       << denominator(c).str() << "\"}";
  }
  os << ']';
  return os.str();
}

Rational parse_rational(const std::string& text) {
  using boost::multiprecision::cpp_int;
  const auto fail = [&] { return DomainError("cannot parse '" + text + "' as a rational"); };
  if (text.empty()) throw fail();
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw fail();
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  cpp_int digits = 0;
  int scale = 0;
  bool seen_digit = false, seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = digits * 10 + (ch - '0');
      seen_digit = true;
      if (seen_point) --scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw fail();
    try {
      std::size_t used = 0;
      scale += std::stoi(text.substr(pos + 1), &used);
      if (pos + 1 + used != text.size()) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
  }
  Rational value(digits);
  const cpp_int ten_power = boost::multiprecision::pow(cpp_int(10), std::abs(scale));
  value = scale >= 0 ? value * Rational(ten_power) : value / Rational(ten_power);
  return negative ? -value : value;
}

}  // namespace dunkl::exact
