#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "modpascal/modp.hpp"

namespace modpascal {

/// Dense m x m matrix over F_p. All entries share one modulus; operations
/// between matrices of different dimension or modulus throw.
///
/// Vectors follow the row convention: a vector acts on the left, v -> v*M,
/// and endomorphism matrices are laid out row by row.
class FpMatrix {
 public:
  /// Zero matrix. Throws std::invalid_argument for dim < 1.
  FpMatrix(std::size_t dim, PrimeModulus mod);

  static FpMatrix identity(std::size_t dim, PrimeModulus mod);

  /// Builds a matrix from rows of residues; every entry must carry the same
  /// modulus and every row must have length rows.size().
  static FpMatrix from_rows(const std::vector<std::vector<Residue>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  PrimeModulus modulus() const noexcept { return mod_; }

  Residue at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Residue& value);

  /// Canonical entry value, unchecked. Hot-path accessor.
  std::uint32_t raw(std::size_t r, std::size_t c) const noexcept {
    return a_[r * dim_ + c];
  }

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  /// Binary exponentiation; pow(0) is the identity.
  FpMatrix pow(std::uint64_t e) const;

  /// v * M for a row vector v of length dim().
  std::vector<Residue> mul_row(std::span<const Residue> v) const;

  /// v * M on canonical residue values. in and out must not alias and must
  /// both have length dim().
  void mul_row_raw(std::span<const std::uint32_t> in,
                   std::span<std::uint32_t> out) const;

 private:
  std::size_t dim_;
  PrimeModulus mod_;
  std::vector<std::uint32_t> a_;  // row-major canonical values
};

/// Jordan block J with eigenvalue 0: 1's on the first superdiagonal.
/// Nilpotent with J^m = 0.
FpMatrix jordan_nilpotent(std::size_t m, PrimeModulus p);

/// Jordan block A = I + J with eigenvalue 1.
FpMatrix jordan_unipotent(std::size_t m, PrimeModulus p);

/// I + a + a^2 + ... + a^(count-1) by repeated multiply-accumulate.
/// Throws std::invalid_argument for count < 1.
FpMatrix geometric_sum(const FpMatrix& a, std::uint64_t count);

/// For an upper-triangular Toeplitz x, the coefficients [c_0, ..., c_{m-1}]
/// with x = sum c_i * J^i (J^0 = I). The structure is checked strictly;
/// anything outside the span of {I, J, ..., J^{m-1}} throws
/// std::invalid_argument.
std::vector<Residue> superdiagonal_coeffs(const FpMatrix& x);

/// Whether (A - I)^e = 0 for the m x m unipotent block A, i.e. whether
/// e >= m. Testing e = m-1 and e = m confirms that the minimal polynomial
/// of A is (X-1)^m.
bool minimal_poly_degree_check(std::size_t m, PrimeModulus p, std::uint64_t e);

/// Polynomial over F_p, coefficients in ascending degree, canonical form
/// (no trailing zero coefficients; the zero polynomial has none).
class FpPolynomial {
 public:
  explicit FpPolynomial(PrimeModulus mod) : mod_(mod) {}

  static FpPolynomial from_coeffs(PrimeModulus mod,
                                  const std::vector<Residue>& coeffs);

  PrimeModulus modulus() const noexcept { return mod_; }
  bool is_zero() const noexcept { return c_.empty(); }

  /// Degree of the polynomial; -1 for the zero polynomial.
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(c_.size()) - 1;
  }

  /// Coefficient of X^i; zero beyond the degree.
  Residue coeff(std::size_t i) const noexcept;

  std::vector<Residue> coefficients() const;

  friend FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b);
  friend bool operator==(const FpPolynomial&, const FpPolynomial&) = default;

 private:
  PrimeModulus mod_;
  std::vector<std::uint32_t> c_;
};

/// (X - 1)^exponent over F_p, by repeated multiplication by (X - 1).
/// For exponent = p^n - 1 this is the all-ones polynomial of length p^n:
/// 1 + X + ... + X^(p^n - 1).
FpPolynomial poly_pow_linear(PrimeModulus p, std::uint64_t exponent);

}  // namespace modpascal
