#include "modpascal/modp.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace modpascal;

TEST_CASE("PrimeModulus accepts primes and rejects everything else") {
  CHECK(PrimeModulus(2).value() == 2);
  CHECK(PrimeModulus(3).value() == 3);
  CHECK(PrimeModulus(10007).value() == 10007);
  CHECK(PrimeModulus(0x7fffffffu).value() == 0x7fffffffu);  // Mersenne 2^31-1

  CHECK_THROWS_AS(PrimeModulus(0), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(10000), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(0x80000000u), std::invalid_argument);
}

TEST_CASE("is_prime by trial division") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(9));
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(1000001));  // 101 * 9901
  CHECK(is_prime(1000003));
}

TEST_CASE("Residue canonicalizes on construction") {
  const PrimeModulus p(7);
  CHECK(Residue(0, p).value() == 0);
  CHECK(Residue(13, p).value() == 6);
  CHECK(Residue(-1, p).value() == 6);
  CHECK(Residue(-14, p).value() == 0);
  CHECK(Residue(7, p).is_zero());
}

TEST_CASE("Residue arithmetic stays canonical") {
  const PrimeModulus p(5);
  const Residue a(3, p), b(4, p);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 4);
  CHECK((b - a).value() == 1);
  CHECK((a * b).value() == 2);
  CHECK((-a).value() == 2);
  CHECK((-Residue(0, p)).value() == 0);
  CHECK(a.pow(0).value() == 1);
  CHECK(a.pow(4).value() == 1);  // Fermat
  CHECK((a.inverse() * a).value() == 1);
  CHECK_THROWS_AS(Residue(0, p).inverse(), std::domain_error);
}

TEST_CASE("Residue arithmetic refuses mixed moduli") {
  const Residue a(1, PrimeModulus(5));
  const Residue b(1, PrimeModulus(7));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a - b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("Residue field axioms hold on random triples") {
  std::mt19937 rng(20260815);
  for (std::uint32_t pv : {2u, 3u, 13u, 10007u}) {
    const PrimeModulus p(pv);
    std::uniform_int_distribution<std::int64_t> dist(0, pv - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Residue a(dist(rng), p), b(dist(rng), p), c(dist(rng), p);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Residue(0, p));
      if (!a.is_zero()) CHECK(a * a.inverse() == Residue(1, p));
    }
  }
}

TEST_CASE("digits produces canonical little-endian expansions") {
  CHECK(digits(0, 2).digits.empty());
  CHECK(digits(10, 2).digits == std::vector<std::uint64_t>{0, 1, 0, 1});
  CHECK(digits(25, 3).digits == std::vector<std::uint64_t>{1, 2, 2});
  CHECK(digits(25, 3).base == 3);
  CHECK_THROWS_AS(digits(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(digits(5, 0), std::invalid_argument);
}

TEST_CASE("digits round-trips through digit_value") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t x = rng();
    const std::uint64_t base = 2 + rng() % 1000;
    const DigitString d = digits(x, base);
    CHECK(d.canonical());
    CHECK(digit_value(d) == x);
  }
  CHECK(digit_value(digits(~0ull, 2)) == ~0ull);
}

TEST_CASE("digit_value overflows loudly") {
  DigitString d;
  d.base = 1ull << 32;
  d.digits = {0, 0, 1};  // (2^32)^2 = 2^64
  CHECK_THROWS_AS(digit_value(d), std::overflow_error);
}

TEST_CASE("canonical() spots bad digit strings") {
  DigitString d;
  d.base = 3;
  d.digits = {1, 0};  // leading zero
  CHECK_FALSE(d.canonical());
  d.digits = {3};  // digit out of range
  CHECK_FALSE(d.canonical());
  d.digits = {};
  CHECK(d.canonical());
}

TEST_CASE("checked_pow_u64 computes or throws") {
  CHECK(checked_pow_u64(2, 0) == 1);
  CHECK(checked_pow_u64(2, 63) == 1ull << 63);
  CHECK(checked_pow_u64(5, 27) == 7450580596923828125ull);
  CHECK_THROWS_AS(checked_pow_u64(2, 64), std::overflow_error);
  CHECK_THROWS_AS(checked_pow_u64(5, 28), std::overflow_error);
}

TEST_CASE("binom_pascal on known values") {
  CHECK(binom_pascal(5, 0, PrimeModulus(7)).value() == 1);
  CHECK(binom_pascal(5, 2, PrimeModulus(2)).value() == 0);  // C(5,2) = 10
  CHECK(binom_pascal(7, 3, PrimeModulus(2)).value() == 1);  // C(7,3) = 35
  CHECK(binom_pascal(5, 5, PrimeModulus(3)).value() == 1);
  CHECK(binom_pascal(6, 3, PrimeModulus(7)).value() == 6);  // C(6,3) = 20
}

TEST_CASE("binom_pascal returns 0 above the diagonal and honors its cap") {
  CHECK(binom_pascal(3, 5, PrimeModulus(5)).value() == 0);
  CHECK_THROWS_AS(binom_pascal(kPascalOracleCap + 1, 1, PrimeModulus(3)),
                  std::length_error);
  // A custom cap raises the ceiling.
  CHECK(binom_pascal(6000, 1, PrimeModulus(7), 6000).value() == 6000 % 7);
  CHECK_THROWS_AS(binom_pascal(100, 2, PrimeModulus(3), 99),
                  std::length_error);
}

TEST_CASE("binom_lucas on known values") {
  CHECK(binom_lucas(5, 2, PrimeModulus(2)).value() == 0);
  CHECK(binom_lucas(7, 3, PrimeModulus(2)).value() == 1);
  CHECK(binom_lucas(1000000000000000000ull, 0, PrimeModulus(13)).value() == 1);
  CHECK(binom_lucas(3, 5, PrimeModulus(5)).value() == 0);
  // C(10,5) = 252 = 2 mod 5; digits 10=(20)_5, 5=(10)_5: C(2,1)*C(0,0) = 2.
  CHECK(binom_lucas(10, 5, PrimeModulus(5)).value() == 2);
}

TEST_CASE("binom_lucas matches binom_pascal on a dense grid") {
  for (std::uint32_t pv : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const PrimeModulus p(pv);
    for (std::uint64_t n = 0; n <= 120; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        CAPTURE(pv);
        CAPTURE(n);
        CAPTURE(k);
        REQUIRE(binom_lucas(n, k, p) == binom_pascal(n, k, p));
      }
    }
  }
}

TEST_CASE("kummer_carries counts carries") {
  CHECK(kummer_carries(1, 1, PrimeModulus(2)) == 1);
  CHECK(kummer_carries(2, 2, PrimeModulus(2)) == 1);
  CHECK(kummer_carries(123456789, 0, PrimeModulus(7)) == 0);
  CHECK(kummer_carries(1, 1, PrimeModulus(3)) == 0);
  // 7 + 7 = (12)+(12) in base 5: units 2+2=4 no carry, fives 1+1=2 no carry.
  CHECK(kummer_carries(7, 7, PrimeModulus(5)) == 0);
  // 3 + 3 = (11)_2 + (11)_2: two carries.
  CHECK(kummer_carries(3, 3, PrimeModulus(2)) == 2);
}

TEST_CASE("legendre_valuation on known values") {
  CHECK(legendre_valuation(2, 1, PrimeModulus(2)) == 1);
  CHECK(legendre_valuation(4, 2, PrimeModulus(2)) == 1);  // v2(6) = 1
  CHECK(legendre_valuation(1000000, 0, PrimeModulus(3)) == 0);
  CHECK(legendre_valuation(6, 3, PrimeModulus(2)) == 2);  // v2(20) = 2
  CHECK_THROWS_AS(legendre_valuation(3, 5, PrimeModulus(5)),
                  std::domain_error);
}

TEST_CASE("carry count equals the factorial valuation") {
  for (std::uint32_t pv : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const PrimeModulus p(pv);
    for (std::uint64_t n = 0; n <= 200; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        REQUIRE(kummer_carries(k, n - k, p) == legendre_valuation(n, k, p));
      }
    }
  }
}

TEST_CASE("binomial vanishes mod p exactly when a carry occurs") {
  for (std::uint32_t pv : {2u, 3u, 7u}) {
    const PrimeModulus p(pv);
    for (std::uint64_t n = 0; n <= 150; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        const bool zero = binom_lucas(n, k, p).is_zero();
        const bool carried = kummer_carries(k, n - k, p) >= 1;
        REQUIRE(zero == carried);
      }
    }
  }
}
