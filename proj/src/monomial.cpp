#include "betti/monomial.hpp"

#include <cctype>
#include <stdexcept>

namespace betti {

Monomial::Monomial(Exponents e) : e_(std::move(e)) {
  for (Eigen::Index i = 0; i < e_.size(); ++i) {
    if (e_[i] < 0) throw std::invalid_argument("negative exponent");
    if (e_[i] > kMaxExponent) throw std::invalid_argument("exponent exceeds cap");
  }
}

Monomial Monomial::unit(int n_vars) {
  return Monomial(Exponents::Zero(n_vars));
}

std::int64_t Monomial::degree() const {
  return e_.cast<std::int64_t>().sum();
}

static void check_same_ring(const Monomial& a, const Monomial& b) {
  if (a.n_vars() != b.n_vars())
    throw std::invalid_argument("monomials live in different rings");
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  return (a.exponents().array() <= b.exponents().array()).all();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  return Monomial(a.exponents().cwiseMax(b.exponents()));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  if (!divides(b, a)) throw std::invalid_argument("quotient is not a monomial");
  return Monomial(a.exponents() - b.exponents());
}

Monomial parse_monomial(const std::string& text, int n_vars) {
  if (n_vars < 0) throw std::invalid_argument("negative ring size");
  Exponents e = Exponents::Zero(n_vars);
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  auto read_int = [&]() -> long {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected integer in monomial '" + text + "'");
    if (pos - start > 9) throw std::invalid_argument("integer too large in monomial '" + text + "'");
    return std::stol(text.substr(start, pos - start));
  };

  skip_ws();
  if (pos >= text.size()) throw std::invalid_argument("empty monomial");
  if (text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing input after unit monomial");
    return Monomial(std::move(e));
  }
  for (;;) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'x')
      throw std::invalid_argument("expected variable in monomial '" + text + "'");
    ++pos;
    long idx = read_int();
    if (idx < 1 || idx > n_vars)
      throw std::invalid_argument("variable index out of range in '" + text + "'");
    long exp = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      exp = read_int();
      if (exp < 1 || exp > kMaxExponent)
        throw std::invalid_argument("exponent out of range in '" + text + "'");
    }
    if (e[idx - 1] + exp > kMaxExponent)
      throw std::invalid_argument("exponent exceeds cap in '" + text + "'");
    e[idx - 1] += static_cast<std::int32_t>(exp);
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '*')
      throw std::invalid_argument("unexpected character '" + std::string(1, text[pos]) +
                                  "' in monomial '" + text + "'");
    ++pos;
  }
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (int i = 0; i < m.n_vars(); ++i) {
    if (m.exponent(i) == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (m.exponent(i) > 1) {
      out += '^';
      out += std::to_string(m.exponent(i));
    }
  }
  return out;
}

std::size_t ExponentsHash::operator()(const Exponents& e) const {
  std::size_t h = 1469598103934665603ull;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    h ^= static_cast<std::size_t>(e[i]) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace betti
