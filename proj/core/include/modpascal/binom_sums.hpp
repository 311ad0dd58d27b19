#pragma once

#include <cstdint>
#include <vector>

#include "modpascal/modp.hpp"

namespace modpascal {

inline constexpr std::uint64_t kColumnSumCap = 10000;

/// Column sums of Pascal's triangle reduced mod p: residues[i] is
/// C(i,i) + C(i+1,i) + ... + C(p^n - 1, i) mod p for 0 <= i < p^n.
///
/// The verdict is true iff residues[i] = 0 for all i < p^n - 1 and the
/// boundary entry residues[p^n - 1] equals 1 (it is the single term
/// C(p^n - 1, p^n - 1), which is why the congruence excludes the last
/// column). A false verdict signals an implementation bug, not a
/// mathematical possibility.
struct SumReport {
  PrimeModulus p;
  std::uint32_t n;
  std::vector<Residue> residues;
  bool verdict;
};

/// Direct column sum: adds C(k,i) mod p for k = i .. p^n - 1, each term
/// evaluated as its product of base-p digit binomials. The digits of k
/// advance as an odometer with ratio-updated factors, so a term costs O(1)
/// amortized after an O(p) inverse-table setup. Throws std::out_of_range
/// for i >= p^n and std::length_error when p^n exceeds the cap.
Residue column_sum(PrimeModulus p, std::uint32_t n, std::uint64_t i,
                   std::uint64_t cap = kColumnSumCap);

/// Independent oracle for column_sum via the hockey-stick identity
/// sum_{k=i}^{N-1} C(k,i) = C(N, i+1), reduced with Lucas.
Residue column_sum_hockeystick(PrimeModulus p, std::uint32_t n,
                               std::uint64_t i,
                               std::uint64_t cap = kColumnSumCap);

/// Full report of all p^n column sums. Computed by streaming rows of
/// Pascal's triangle with the additive recurrence and accumulating each
/// column in residues, which keeps a 10^4-row report under a second.
SumReport sum_report(PrimeModulus p, std::uint32_t n,
                     std::uint64_t cap = kColumnSumCap);

}  // namespace modpascal
