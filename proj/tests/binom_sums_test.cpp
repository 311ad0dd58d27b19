#include "modpascal/binom_sums.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "modpascal/modp.hpp"

using namespace modpascal;

namespace {

// Exact 64-bit binomials for small arguments; an oracle with no modular
// arithmetic in it at all.
std::uint64_t binom_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (std::uint64_t t = 1; t <= k; ++t) {
    acc = acc * (n - k + t) / t;  // exact: prefix products are binomials
  }
  return acc;
}

}  // namespace

TEST_CASE("column_sum on known values") {
  CHECK(column_sum(PrimeModulus(2), 2, 1).value() == 0);  // 1+2+3 = 6
  CHECK(column_sum(PrimeModulus(3), 1, 2).value() == 1);  // single term C(2,2)
  CHECK(column_sum(PrimeModulus(2), 2, 3).value() == 1);  // single term C(3,3)
  CHECK(column_sum(PrimeModulus(5), 1, 0).value() == 0);  // 5 ones
}

TEST_CASE("column_sum_hockeystick on known values") {
  CHECK(column_sum_hockeystick(PrimeModulus(2), 2, 1).value() == 0);  // C(4,2)
  CHECK(column_sum_hockeystick(PrimeModulus(3), 1, 2).value() == 1);  // C(3,3)
  CHECK(column_sum_hockeystick(PrimeModulus(2), 1, 0).value() == 0);  // C(2,1)
}

TEST_CASE("column sums validate their arguments") {
  const PrimeModulus p(3);
  CHECK_THROWS_AS(column_sum(p, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(column_sum(p, 2, 9), std::out_of_range);
  CHECK_THROWS_AS(column_sum_hockeystick(p, 2, 9), std::out_of_range);
  // 3^9 = 19683 over the default cap of 10^4.
  CHECK_THROWS_AS(column_sum(p, 9, 0), std::length_error);
  CHECK_THROWS_AS(column_sum_hockeystick(p, 9, 0), std::length_error);
  CHECK_THROWS_AS(sum_report(p, 9), std::length_error);
  // A custom cap admits it.
  CHECK(column_sum(p, 9, 19682, 19683).value() == 1);
}

TEST_CASE("sum_report on known values") {
  const SumReport r22 = sum_report(PrimeModulus(2), 2);
  REQUIRE(r22.residues.size() == 4);
  CHECK(r22.residues[0].value() == 0);  // 1+1+1+1 = 4
  CHECK(r22.residues[1].value() == 0);  // 1+2+3 = 6
  CHECK(r22.residues[2].value() == 0);  // 1+3 = 4
  CHECK(r22.residues[3].value() == 1);
  CHECK(r22.verdict);

  const SumReport r31 = sum_report(PrimeModulus(3), 1);
  REQUIRE(r31.residues.size() == 3);
  CHECK(r31.residues[0].value() == 0);  // 1+1+1 = 3
  CHECK(r31.residues[1].value() == 0);  // 1+2 = 3
  CHECK(r31.residues[2].value() == 1);
  CHECK(r31.verdict);

  const SumReport r51 = sum_report(PrimeModulus(5), 1);
  REQUIRE(r51.residues.size() == 5);
  for (std::size_t i = 0; i < 4; ++i) CHECK(r51.residues[i].value() == 0);
  CHECK(r51.residues[4].value() == 1);
  CHECK(r51.verdict);
}

TEST_CASE("column sums match the exact integer oracle") {
  // p^n small enough that every partial sum fits exactly in 64 bits.
  for (auto [pv, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 2},
                       {2, 4},
                       {3, 2},
                       {5, 1},
                       {7, 1},
                       {13, 1}}) {
    const PrimeModulus p(pv);
    const std::uint64_t q = checked_pow_u64(pv, n);
    const SumReport report = sum_report(p, n);
    for (std::uint64_t i = 0; i < q; ++i) {
      std::uint64_t exact = 0;
      for (std::uint64_t k = i; k < q; ++k) exact += binom_exact(k, i);
      CAPTURE(pv);
      CAPTURE(n);
      CAPTURE(i);
      REQUIRE(column_sum(p, n, i).value() == exact % pv);
      REQUIRE(report.residues[i].value() == exact % pv);
    }
  }
}

TEST_CASE("three independent routes agree entry by entry") {
  for (auto [pv, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 5},
                       {3, 3},
                       {5, 2},
                       {7, 2},
                       {11, 1},
                       {13, 1}}) {
    const PrimeModulus p(pv);
    const std::uint64_t q = checked_pow_u64(pv, n);
    const SumReport report = sum_report(p, n);
    REQUIRE(report.residues.size() == q);
    REQUIRE(report.verdict);
    for (std::uint64_t i = 0; i < q; ++i) {
      const Residue direct = column_sum(p, n, i);
      CAPTURE(pv);
      CAPTURE(n);
      CAPTURE(i);
      REQUIRE(direct == column_sum_hockeystick(p, n, i));
      REQUIRE(direct == report.residues[i]);
    }
  }
}

TEST_CASE("verdict flags a doctored report") {
  // The verdict criterion is residues[i] = 0 below the boundary and 1 at it;
  // build a report and check the flag logic by probing the fields directly.
  SumReport r = sum_report(PrimeModulus(3), 2);
  REQUIRE(r.verdict);
  r.residues[0] = Residue(1, PrimeModulus(3));
  // The verdict member is a snapshot; recompute manually.
  bool ok = true;
  for (std::size_t i = 0; i < r.residues.size(); ++i) {
    const std::uint32_t expected = i + 1 < r.residues.size() ? 0 : 1;
    if (r.residues[i].value() != expected) ok = false;
  }
  CHECK_FALSE(ok);
}
