#pragma once

#include <cstdint>
#include <vector>

#include "modpascal/fpmatrix.hpp"
#include "modpascal/modp.hpp"

namespace modpascal {

inline constexpr std::uint64_t kBruteForceCap = 1ull << 20;

/// An element of Hol(V, alpha), stored in the normal form alpha^k * v with
/// the automorphism part on the left: k is an exponent of alpha reduced mod
/// ord(alpha), and v is a row vector over F_p of length dim(V).
struct HolElement {
  std::uint64_t k;
  std::vector<Residue> v;

  friend bool operator==(const HolElement&, const HolElement&) = default;
};

/// G = Hol(V, alpha) for V = F_p^m and alpha the automorphism represented by
/// the unipotent Jordan block A = I + J in the standard basis. Requires
/// m >= 2 and the canonical level n with p^(n-1) < m <= p^n, under which
/// ord(alpha) = p^n and |G| = p^(m+n).
///
/// Construction (via hol_group) validates the level bounds, verifies the
/// order of alpha by matrix powers, and checks that p^(m+n) fits in 64 bits.
class HolGroup {
 public:
  PrimeModulus prime() const noexcept { return p_; }
  std::uint32_t dim() const noexcept { return m_; }

  /// The canonical n with p^(n-1) < dim <= p^n.
  std::uint32_t level() const noexcept { return n_; }

  std::uint64_t alpha_order() const noexcept { return alpha_order_; }
  std::uint64_t order() const noexcept { return order_; }
  const FpMatrix& alpha() const noexcept { return alpha_; }

  /// A^k with k reduced mod ord(alpha).
  FpMatrix alpha_power(std::uint64_t k) const;

 private:
  HolGroup(PrimeModulus p, std::uint32_t m, std::uint32_t n,
           std::uint64_t alpha_order, FpMatrix alpha, std::uint64_t order);
  friend HolGroup hol_group(PrimeModulus, std::uint32_t);

  PrimeModulus p_;
  std::uint32_t m_;
  std::uint32_t n_;
  std::uint64_t alpha_order_;
  FpMatrix alpha_;
  std::uint64_t order_;
};

/// The unique n >= 1 with p^(n-1) < m <= p^n. Throws std::domain_error
/// for m < 2 (no n >= 1 works for m = 1; that holomorph degenerates to V).
std::uint32_t canonical_n(PrimeModulus p, std::uint32_t m);

/// Builds Hol(V, alpha) and validates its invariants.
HolGroup hol_group(PrimeModulus p, std::uint32_t m);

/// The identity (0, 0-vector).
HolElement hol_identity(const HolGroup& g);

/// Convenience constructor: (k, v) with v given by integer values.
HolElement hol_element(const HolGroup& g, std::uint64_t k,
                       const std::vector<std::int64_t>& values);

// Multiplication in normal form. The holomorph relation says conjugating
// v by alpha applies the automorphism: alpha^-1 v alpha = v*A, i.e.
// v alpha = alpha (v*A), so alpha^k2 can be moved across v1 at the cost of
// applying A^k2:
//
//   (alpha^k1 v1)(alpha^k2 v2) = alpha^(k1+k2) (v1*A^k2) v2
//
// giving (k1, v1)*(k2, v2) = (k1+k2 mod p^n, v1*A^k2 + v2) with V written
// additively.
HolElement hol_mul(const HolGroup& g, const HolElement& x, const HolElement& y);

/// Inverse (-k mod p^n, -v*A^(-k)), with A^(-k) computed as A^(p^n - k).
HolElement hol_inv(const HolGroup& g, const HolElement& x);

/// x^e by binary exponentiation; hol_pow(x, 0) is the identity.
HolElement hol_pow(const HolGroup& g, const HolElement& x, std::uint64_t e);

/// Smallest e >= 1 with x^e = 1. Every order in G is a power of p, so this
/// takes successive p-th powers (at most level+1 of them) instead of a
/// linear search.
std::uint64_t element_order(const HolGroup& g, const HolElement& x);

/// Closed form for the exponent of G: p^n when m < p^n, p^(n+1) when
/// m = p^n.
std::uint64_t exponent_formula(const HolGroup& g);

struct ExponentScan {
  std::uint64_t exponent;  // lcm of all element orders
  std::uint64_t elements;  // number of elements enumerated, = |G|
};

/// Ground-truth exponent by enumerating every (k, v) pair and taking the
/// lcm of the element orders (all powers of p, so the max). Throws
/// std::length_error when |G| exceeds the cap. The enumeration is
/// partitioned into independent chunks whose per-chunk results merge in any
/// order.
ExponentScan exponent_brute(const HolGroup& g,
                            std::uint64_t cap = kBruteForceCap);

/// For m = p^n only: checks the boundary-case witness (alpha e_1)^(p^n) =
/// (0, e_m), the element whose order p^(n+1) exceeds p^n. Throws
/// std::domain_error when m != p^n.
bool witness_check(const HolGroup& g);

/// The endomorphism epsilon with (k, v)^(p^n) = (0, v*epsilon), namely
/// I + A^k + A^(2k) + ... + A^((p^n - 1)k). For k = p^s * j with j coprime
/// to p, this equals (I + A^j + ... + A^((p^n-1)j))^(p^s); both routes are
/// computed and cross-checked. Throws std::domain_error for k >= p^n.
FpMatrix epsilon_endomorphism(const HolGroup& g, std::uint64_t k);

}  // namespace modpascal
