#pragma once

#include <cstdint>
#include <vector>

namespace modpascal {

/// Deterministic primality test by trial division up to sqrt(x).
bool is_prime(std::uint64_t x) noexcept;

/// A prime modulus p with p < 2^31, so products of canonical residues
/// fit in 64-bit arithmetic. Construction rejects composites.
class PrimeModulus {
 public:
  static constexpr std::uint32_t kMaxValue = 0x7fffffffu;

  explicit PrimeModulus(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint32_t p_;
};

/// An element of F_p, kept canonical in [0, p) at all times.
/// Arithmetic between residues of different moduli throws; there is no
/// implicit coercion between fields.
class Residue {
 public:
  Residue(std::int64_t value, PrimeModulus modulus) noexcept;

  std::uint32_t value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Residue& operator+=(const Residue& other);
  Residue& operator-=(const Residue& other);
  Residue& operator*=(const Residue& other);
  Residue operator-() const noexcept;

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend bool operator==(const Residue&, const Residue&) = default;

  Residue pow(std::uint64_t e) const noexcept;

  /// Multiplicative inverse; throws std::domain_error on zero.
  Residue inverse() const;

 private:
  std::uint32_t value_;
  PrimeModulus modulus_;
};

/// Little-endian digit expansion. Canonical form has no leading zeros;
/// zero is the empty digit list.
struct DigitString {
  std::vector<std::uint64_t> digits;
  std::uint64_t base = 2;

  bool canonical() const noexcept;

  friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// Base-b expansion of x, canonical. Throws std::invalid_argument for b < 2.
DigitString digits(std::uint64_t x, std::uint64_t base);

/// Evaluates sum digits[i] * base^i. Throws std::overflow_error if the value
/// does not fit in 64 bits.
std::uint64_t digit_value(const DigitString& d);

/// b^e in 64-bit arithmetic; throws std::overflow_error on overflow.
std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp);

inline constexpr std::uint64_t kPascalOracleCap = 5000;

/// C(n,k) mod p by the additive Pascal recurrence, entirely in residues.
/// Quadratic oracle: throws std::length_error for n above the cap.
/// Returns 0 for k > n.
Residue binom_pascal(std::uint64_t n, std::uint64_t k, PrimeModulus p,
                     std::uint64_t cap = kPascalOracleCap);

/// C(n,k) mod p by Lucas' theorem: the product of base-p digit binomials
/// C(n_i, k_i) mod p. Cost is O(log_p n) digit binomials; no cap.
Residue binom_lucas(std::uint64_t n, std::uint64_t k, PrimeModulus p);

/// Number of carries when adding k and r in base p. By Kummer's theorem
/// this equals v_p(C(k+r, k)).
std::uint64_t kummer_carries(std::uint64_t k, std::uint64_t r, PrimeModulus p);

/// v_p(C(n,k)) via Legendre's formula v_p(x!) = sum_i floor(x / p^i).
/// Throws std::domain_error for k > n.
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t k,
                                 PrimeModulus p);

}  // namespace modpascal
