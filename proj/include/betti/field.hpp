#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace betti {

using Rational = boost::multiprecision::cpp_rational;

// Deterministic for all 32-bit inputs (Miller-Rabin, bases 2,3,5,7,11).
bool is_prime_u32(std::uint32_t p);

// Element of F_p for a runtime prime p < 2^31. Carries its modulus; mixed-
// modulus arithmetic throws. Elements with modulus 0 hold a plain integer not
// yet bound to a field (Eigen materializes Scalar(0)/Scalar(1) literals) and
// adopt the other operand's modulus on contact.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  explicit Fp(long long literal) : v_(0), p_(0) {
    if (literal < 0 || literal >= (1LL << 31))
      throw std::invalid_argument("modulus-free Fp literal out of range");
    v_ = static_cast<std::uint32_t>(literal);
  }
  Fp(std::uint32_t v, std::uint32_t p) : v_(p ? v % p : v), p_(p) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.v_ == 0 && b.v_ == 0) return true;
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend Fp operator+(const Fp& a, const Fp& b) {
    const std::uint32_t p = join(a, b);
    const std::uint64_t s = static_cast<std::uint64_t>(a.reduced(p)) + b.reduced(p);
    return p ? Fp(static_cast<std::uint32_t>(s % p), p) : raw(s);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    const std::uint32_t p = join(a, b);
    const std::uint32_t av = a.reduced(p), bv = b.reduced(p);
    if (p == 0) {
      if (av < bv) throw std::invalid_argument("negative modulus-free Fp difference");
      return raw(av - bv);
    }
    return Fp(av >= bv ? av - bv : av + p - bv, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    const std::uint32_t p = join(a, b);
    const std::uint64_t s = static_cast<std::uint64_t>(a.reduced(p)) * b.reduced(p);
    return p ? Fp(static_cast<std::uint32_t>(s % p), p) : raw(s);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const {
    if (p_ == 0) {
      if (v_ != 0) throw std::invalid_argument("cannot negate a modulus-free Fp literal");
      return Fp();
    }
    return Fp(v_ == 0 ? 0 : p_ - v_, p_);
  }

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  Fp inverse() const;

 private:
  // Resolve the common modulus; modulus-free operands defer to the other side.
  static std::uint32_t join(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw std::invalid_argument("mixed moduli in Fp arithmetic");
    return a.p_;
  }
  std::uint32_t reduced(std::uint32_t p) const { return p_ || p == 0 ? v_ : v_ % p; }
  static Fp raw(std::uint64_t v) {
    if (v >= (1ull << 31)) throw std::overflow_error("modulus-free Fp arithmetic overflow");
    Fp x;
    x.v_ = static_cast<std::uint32_t>(v);
    return x;
  }
  std::uint32_t v_, p_;
};

struct RationalField {
  using Element = Rational;
  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long s) const { return Element(s); }
  static bool is_zero(const Element& a) { return a.is_zero(); }
  std::string name() const { return "rational"; }
};

struct PrimeField {
  using Element = Fp;
  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (p >= (1u << 31) || !is_prime_u32(p))
      throw std::invalid_argument("characteristic must be a prime below 2^31");
  }
  Element zero() const { return Element(0, p); }
  Element one() const { return Element(1, p); }
  Element from_int(long long s) const {
    long long v = s % static_cast<long long>(p);
    if (v < 0) v += p;
    return Element(static_cast<std::uint32_t>(v), p);
  }
  static bool is_zero(const Element& a) { return a.is_zero(); }
  std::string name() const { return "prime:" + std::to_string(p); }
  std::uint32_t p;
};

// "rational" or "prime:P". Throws on anything else.
struct FieldSpec {
  bool rational = true;
  std::uint32_t p = 0;
};
FieldSpec parse_field_spec(const std::string& text);

}  // namespace betti

namespace Eigen {
template <>
struct NumTraits<betti::Fp> {
  using Real = betti::Fp;
  using NonInteger = betti::Fp;
  using Nested = betti::Fp;
  using Literal = betti::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static int digits10() { return 9; }
  static betti::Fp epsilon() { return betti::Fp(); }
  static betti::Fp dummy_precision() { return betti::Fp(); }
  static betti::Fp highest() { return betti::Fp(); }
  static betti::Fp lowest() { return betti::Fp(); }
};
}  // namespace Eigen
