#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>

namespace betti {

// Exponent vector over a fixed ring k[x_1..x_n]. int32 per slot; individual
// exponents are capped at 2^16 so lcm-of-subset degrees stay far from overflow.
using Exponents = Eigen::Matrix<std::int32_t, Eigen::Dynamic, 1>;

constexpr std::int32_t kMaxExponent = 1 << 16;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Exponents e);
  static Monomial unit(int n_vars);

  int n_vars() const { return static_cast<int>(e_.size()); }
  std::int64_t degree() const;
  std::int32_t exponent(int var) const { return e_[var]; }
  const Exponents& exponents() const { return e_; }
  bool is_unit() const { return degree() == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_.size() == b.e_.size() && (a.e_.array() == b.e_.array()).all();
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  Exponents e_;
};

bool divides(const Monomial& a, const Monomial& b);   // a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& a, const Monomial& b);  // a / b, requires b | a

// Grammar: x<i>(^<e>)? factors joined by '*'; literal "1" is the unit.
// Variable indices are 1-based in text, 0-based internally.
Monomial parse_monomial(const std::string& text, int n_vars);
std::string to_string(const Monomial& m);

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const;
};
struct ExponentsEq {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return a.size() == b.size() && (a.array() == b.array()).all();
  }
};

}  // namespace betti
