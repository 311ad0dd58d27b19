#include "modpascal/binom_sums.hpp"

#include <stdexcept>
#include <string>

namespace modpascal {

namespace {

std::uint64_t checked_size(PrimeModulus p, std::uint32_t n,
                           std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("power n must be >= 1");
  const std::uint64_t q = checked_pow_u64(p.value(), n);
  if (q > cap) {
    throw std::length_error("column sum cap exceeded: p^n=" +
                            std::to_string(q) + ", cap=" + std::to_string(cap));
  }
  return q;
}

}  // namespace

Residue column_sum(PrimeModulus p, std::uint32_t n, std::uint64_t i,
                   std::uint64_t cap) {
  const std::uint64_t q = checked_size(p, n, cap);
  if (i >= q) {
    throw std::out_of_range("column index " + std::to_string(i) +
                            " out of range for p^n=" + std::to_string(q));
  }
  const std::uint32_t pv = p.value();

  // Inverse table by the classic recurrence inv[x] = -(p/x) * inv[p%x];
  // valid because p is prime.
  std::vector<std::uint32_t> inv(pv, 0);
  if (pv > 2) {
    inv[1] = 1;
    for (std::uint32_t x = 2; x < pv; ++x) {
      inv[x] = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(pv - pv / x) * inv[pv % x] % pv);
    }
  } else {
    inv[1] = 1;
  }

  // Each term C(k,i) mod p is the product over base-p digits of
  // C(k_t, i_t). The digits of k advance as an odometer, and each digit's
  // factor is ratio-updated: C(a,b) = C(a-1,b) * a / (a-b) once a > b,
  // never passing through zero because a-1 < p keeps C(a-1,b) a unit.
  // suffix[t] caches the product of factors t..n-1, so a bump of digit t
  // refreshes only suffix[t..0].
  std::vector<std::uint32_t> id(n), kd(n), factor(n, 1), suffix(n + 1, 1);
  std::uint64_t rest = i;
  for (std::uint32_t t = 0; t < n; ++t) {
    id[t] = static_cast<std::uint32_t>(rest % pv);
    rest /= pv;
  }
  kd = id;  // k starts at i, every factor C(i_t, i_t) = 1

  std::uint32_t acc = 0;
  for (std::uint64_t k = i;; ++k) {
    const std::uint32_t s = acc + suffix[0];
    acc = s >= pv ? s - pv : s;
    if (k + 1 == q) break;

    std::uint32_t t = 0;
    while (kd[t] + 1 == pv) {
      kd[t] = 0;
      factor[t] = id[t] == 0 ? 1 : 0;  // C(0, b)
      ++t;
    }
    const std::uint32_t a = ++kd[t];
    const std::uint32_t b = id[t];
    if (a < b) {
      factor[t] = 0;
    } else if (a == b) {
      factor[t] = 1;
    } else {
      std::uint64_t f = static_cast<std::uint64_t>(factor[t]) * a % pv;
      factor[t] = static_cast<std::uint32_t>(f * inv[a - b] % pv);
    }
    for (std::uint32_t s2 = t + 1; s2-- > 0;) {
      suffix[s2] = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(factor[s2]) * suffix[s2 + 1] % pv);
    }
  }
  return Residue(acc, p);
}

Residue column_sum_hockeystick(PrimeModulus p, std::uint32_t n,
                               std::uint64_t i, std::uint64_t cap) {
  const std::uint64_t q = checked_size(p, n, cap);
  if (i >= q) {
    throw std::out_of_range("column index " + std::to_string(i) +
                            " out of range for p^n=" + std::to_string(q));
  }
  return binom_lucas(q, i + 1, p);
}

SumReport sum_report(PrimeModulus p, std::uint32_t n, std::uint64_t cap) {
  const std::uint64_t q = checked_size(p, n, cap);
  const std::uint32_t pv = p.value();

  // Stream triangle rows 0 .. q-1; row[j] holds C(r, j) mod p after the
  // in-place update, and acc[j] collects the column sums.
  std::vector<std::uint32_t> row(q, 0), acc(q, 0);
  row[0] = 1 % pv;
  for (std::uint64_t r = 0; r < q; ++r) {
    if (r > 0) {
      for (std::uint64_t j = r; j >= 1; --j) {
        const std::uint32_t s = row[j] + row[j - 1];
        row[j] = s >= pv ? s - pv : s;
      }
    }
    for (std::uint64_t j = 0; j <= r; ++j) {
      const std::uint32_t s = acc[j] + row[j];
      acc[j] = s >= pv ? s - pv : s;
    }
  }

  SumReport report{p, n, {}, true};
  report.residues.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    report.residues.emplace_back(acc[i], p);
    const std::uint32_t expected = i + 1 < q ? 0 : 1 % pv;
    if (acc[i] != expected) report.verdict = false;
  }
  return report;
}

}  // namespace modpascal
