#include "betti/field.hpp"

namespace betti {

static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<unsigned __int128>(r) * b % m;
    b = static_cast<unsigned __int128>(b) * b % m;
    e >>= 1;
  }
  return r;
}

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // bases 2..11 have no common strong pseudoprime below 2^41
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull}) {
    std::uint64_t x = pow_mod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = static_cast<unsigned __int128>(x) * x % p;
      if (x == p - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in Fp");
  if (p_ == 0) {
    if (v_ == 1) return *this;
    throw std::invalid_argument("cannot invert a modulus-free Fp literal");
  }
  // extended euclid on (v, p)
  std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
  while (m) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (x0 < 0) x0 += p_;
  return Fp(static_cast<std::uint32_t>(x0), p_);
}

FieldSpec parse_field_spec(const std::string& text) {
  if (text == "rational") return FieldSpec{true, 0};
  const std::string prefix = "prime:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (digits.empty() || digits.size() > 10)
      throw std::invalid_argument("bad field spec '" + text + "'");
    for (char c : digits)
      if (c < '0' || c > '9') throw std::invalid_argument("bad field spec '" + text + "'");
    unsigned long long p = std::stoull(digits);
    if (p >= (1ull << 31) || !is_prime_u32(static_cast<std::uint32_t>(p)))
      throw std::invalid_argument("field characteristic must be a prime below 2^31");
    return FieldSpec{false, static_cast<std::uint32_t>(p)};
  }
  throw std::invalid_argument("field must be 'rational' or 'prime:P', got '" + text + "'");
}

}  // namespace betti
