#include "modpascal/modp.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace modpascal {

namespace {

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b,
                      std::uint32_t p) noexcept {
  std::uint32_t s = a + b;  // a, b < p < 2^31, no wraparound
  return s >= p ? s - p : s;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b,
                      std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e,
                      std::uint32_t p) noexcept {
  std::uint32_t acc = 1 % p;
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return acc;
}

// C(a,b) mod p for 0 <= b <= a < p, via the falling-factorial quotient
// prod (a-b+t)/t. Every factor is a unit mod p because a < p.
std::uint32_t digit_binom(std::uint64_t a, std::uint64_t b,
                          std::uint32_t p) noexcept {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  std::uint32_t acc = 1 % p;
  for (std::uint64_t t = 1; t <= b; ++t) {
    acc = mul_mod(acc, static_cast<std::uint32_t>(a - b + t), p);
    acc = mul_mod(acc, pow_mod(static_cast<std::uint32_t>(t), p - 2, p), p);
  }
  return acc;
}

[[noreturn]] void throw_modulus_mismatch(std::uint32_t a, std::uint32_t b) {
  throw std::invalid_argument("modulus mismatch: " + std::to_string(a) +
                              " vs " + std::to_string(b));
}

}  // namespace

bool is_prime(std::uint64_t x) noexcept {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (std::uint64_t d = 3; d * d <= x; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
  if (p > kMaxValue) {
    throw std::invalid_argument("modulus too large: " + std::to_string(p) +
                                " (cap " + std::to_string(kMaxValue) + ")");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus must be prime: " + std::to_string(p));
  }
}

Residue::Residue(std::int64_t value, PrimeModulus modulus) noexcept
    : modulus_(modulus) {
  const std::int64_t p = modulus.value();
  std::int64_t r = value % p;
  if (r < 0) r += p;
  value_ = static_cast<std::uint32_t>(r);
}

Residue& Residue::operator+=(const Residue& other) {
  if (modulus_ != other.modulus_)
    throw_modulus_mismatch(modulus_.value(), other.modulus_.value());
  value_ = add_mod(value_, other.value_, modulus_.value());
  return *this;
}

Residue& Residue::operator-=(const Residue& other) {
  if (modulus_ != other.modulus_)
    throw_modulus_mismatch(modulus_.value(), other.modulus_.value());
  const std::uint32_t p = modulus_.value();
  const std::uint32_t neg = other.value_ == 0 ? 0 : p - other.value_;
  value_ = add_mod(value_, neg, p);
  return *this;
}

Residue& Residue::operator*=(const Residue& other) {
  if (modulus_ != other.modulus_)
    throw_modulus_mismatch(modulus_.value(), other.modulus_.value());
  value_ = mul_mod(value_, other.value_, modulus_.value());
  return *this;
}

Residue Residue::operator-() const noexcept {
  Residue r = *this;
  r.value_ = value_ == 0 ? 0 : modulus_.value() - value_;
  return r;
}

Residue Residue::pow(std::uint64_t e) const noexcept {
  Residue r = *this;
  r.value_ = pow_mod(value_, e, modulus_.value());
  return r;
}

Residue Residue::inverse() const {
  if (value_ == 0) throw std::domain_error("zero residue has no inverse");
  return pow(modulus_.value() - 2);  // Fermat: a^(p-2) = a^-1 for prime p
}

bool DigitString::canonical() const noexcept {
  if (base < 2) return false;
  for (std::uint64_t d : digits) {
    if (d >= base) return false;
  }
  return digits.empty() || digits.back() != 0;
}

DigitString digits(std::uint64_t x, std::uint64_t base) {
  if (base < 2) {
    throw std::invalid_argument("digit base must be at least 2, got " +
                                std::to_string(base));
  }
  DigitString out;
  out.base = base;
  while (x > 0) {
    out.digits.push_back(x % base);
    x /= base;
  }
  return out;
}

std::uint64_t digit_value(const DigitString& d) {
  std::uint64_t acc = 0;
  std::uint64_t scale = 1;
  for (std::size_t i = 0; i < d.digits.size(); ++i) {
    std::uint64_t term;
    if (__builtin_mul_overflow(d.digits[i], scale, &term) ||
        __builtin_add_overflow(acc, term, &acc)) {
      throw std::overflow_error("digit string value exceeds 64 bits");
    }
    if (i + 1 < d.digits.size() &&
        __builtin_mul_overflow(scale, d.base, &scale)) {
      throw std::overflow_error("digit string value exceeds 64 bits");
    }
  }
  return acc;
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(acc, base, &acc)) {
      throw std::overflow_error(std::to_string(base) + "^" +
                                std::to_string(exp) + " exceeds 64 bits");
    }
  }
  return acc;
}

Residue binom_pascal(std::uint64_t n, std::uint64_t k, PrimeModulus p,
                     std::uint64_t cap) {
  if (n > cap) {
    throw std::length_error("pascal oracle cap exceeded: n=" +
                            std::to_string(n) + ", cap=" + std::to_string(cap));
  }
  if (k > n) return Residue(0, p);
  if (k > n - k) k = n - k;  // C(n,k) = C(n,n-k); shortens the row prefix
  const std::uint32_t pv = p.value();
  std::vector<std::uint32_t> row(k + 1, 0);
  row[0] = 1 % pv;
  for (std::uint64_t r = 1; r <= n; ++r) {
    std::uint64_t hi = r < k ? r : k;
    for (std::uint64_t j = hi; j >= 1; --j) {
      row[j] = add_mod(row[j], row[j - 1], pv);
    }
  }
  return Residue(row[k], p);
}

Residue binom_lucas(std::uint64_t n, std::uint64_t k, PrimeModulus p) {
  const std::uint32_t pv = p.value();
  std::uint32_t acc = 1 % pv;
  while (n > 0 || k > 0) {
    const std::uint64_t nd = n % pv;
    const std::uint64_t kd = k % pv;
    if (kd > nd) return Residue(0, p);
    acc = mul_mod(acc, digit_binom(nd, kd, pv), pv);
    n /= pv;
    k /= pv;
  }
  return Residue(acc, p);
}

std::uint64_t kummer_carries(std::uint64_t k, std::uint64_t r,
                             PrimeModulus p) {
  const std::uint64_t pv = p.value();
  std::uint64_t carries = 0;
  std::uint64_t carry = 0;
  while (k > 0 || r > 0 || carry > 0) {
    const std::uint64_t s = k % pv + r % pv + carry;
    carry = s >= pv ? 1 : 0;
    carries += carry;
    k /= pv;
    r /= pv;
  }
  return carries;
}

namespace {

std::uint64_t factorial_valuation(std::uint64_t x, std::uint64_t p) noexcept {
  std::uint64_t acc = 0;
  while (x > 0) {
    x /= p;
    acc += x;
  }
  return acc;
}

}  // namespace

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t k,
                                 PrimeModulus p) {
  if (k > n) {
    throw std::domain_error("legendre_valuation requires k <= n, got k=" +
                            std::to_string(k) + ", n=" + std::to_string(n));
  }
  const std::uint64_t pv = p.value();
  return factorial_valuation(n, pv) - factorial_valuation(k, pv) -
         factorial_valuation(n - k, pv);
}

}  // namespace modpascal
