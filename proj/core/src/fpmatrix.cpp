#include "modpascal/fpmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modpascal {

namespace {

void require_same_shape(const FpMatrix& a, const FpMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(
        "matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
        std::to_string(b.dim()));
  }
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument(
        "matrix modulus mismatch: " + std::to_string(a.modulus().value()) +
        " vs " + std::to_string(b.modulus().value()));
  }
}

// Entry products fit a uint64 sum of up to 2^32 terms when p < 2^16;
// larger moduli reduce every step.
constexpr std::uint32_t kDeferredReductionBound = 1u << 16;

}  // namespace

FpMatrix::FpMatrix(std::size_t dim, PrimeModulus mod)
    : dim_(dim), mod_(mod), a_(dim * dim, 0) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

FpMatrix FpMatrix::identity(std::size_t dim, PrimeModulus mod) {
  FpMatrix m(dim, mod);
  const std::uint32_t one = 1 % mod.value();
  for (std::size_t i = 0; i < dim; ++i) m.a_[i * dim + i] = one;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<Residue>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix dimension must be >= 1");
  const std::size_t dim = rows.size();
  if (rows[0].size() != dim) {
    throw std::invalid_argument("matrix rows must all have length " +
                                std::to_string(dim));
  }
  const PrimeModulus mod = rows[0][0].modulus();
  FpMatrix m(dim, mod);
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) {
      throw std::invalid_argument("matrix rows must all have length " +
                                  std::to_string(dim));
    }
    for (std::size_t c = 0; c < dim; ++c) {
      if (rows[r][c].modulus() != mod) {
        throw std::invalid_argument(
            "matrix entries must share one modulus: " +
            std::to_string(mod.value()) + " vs " +
            std::to_string(rows[r][c].modulus().value()));
      }
      m.a_[r * dim + c] = rows[r][c].value();
    }
  }
  return m;
}

Residue FpMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= dim_ || c >= dim_) {
    throw std::out_of_range("matrix index (" + std::to_string(r) + "," +
                            std::to_string(c) + ") out of range for dim " +
                            std::to_string(dim_));
  }
  return Residue(a_[r * dim_ + c], mod_);
}

void FpMatrix::set(std::size_t r, std::size_t c, const Residue& value) {
  if (r >= dim_ || c >= dim_) {
    throw std::out_of_range("matrix index (" + std::to_string(r) + "," +
                            std::to_string(c) + ") out of range for dim " +
                            std::to_string(dim_));
  }
  if (value.modulus() != mod_) {
    throw std::invalid_argument(
        "entry modulus mismatch: " + std::to_string(mod_.value()) + " vs " +
        std::to_string(value.modulus().value()));
  }
  a_[r * dim_ + c] = value.value();
}

bool FpMatrix::is_zero() const noexcept {
  for (std::uint32_t v : a_) {
    if (v != 0) return false;
  }
  return true;
}

bool FpMatrix::is_identity() const noexcept {
  const std::uint32_t one = 1 % mod_.value();
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (a_[r * dim_ + c] != (r == c ? one : 0)) return false;
    }
  }
  return true;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  require_same_shape(a, b);
  const std::uint32_t p = a.mod_.value();
  FpMatrix out(a.dim_, a.mod_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    const std::uint32_t s = a.a_[i] + b.a_[i];
    out.a_[i] = s >= p ? s - p : s;
  }
  return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  require_same_shape(a, b);
  const std::uint32_t p = a.mod_.value();
  FpMatrix out(a.dim_, a.mod_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    const std::uint32_t s = a.a_[i] + (b.a_[i] == 0 ? 0 : p - b.a_[i]);
    out.a_[i] = s >= p ? s - p : s;
  }
  return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  require_same_shape(a, b);
  const std::size_t m = a.dim_;
  const std::uint64_t p = a.mod_.value();
  FpMatrix out(m, a.mod_);
  std::vector<std::uint64_t> acc(m);
  const bool deferred = p < kDeferredReductionBound;
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < m; ++k) {
      const std::uint64_t aik = a.a_[i * m + k];
      if (aik == 0) continue;  // Jordan powers are banded; skipping zeros pays
      const std::uint32_t* brow = &b.a_[k * m];
      if (deferred) {
        for (std::size_t j = 0; j < m; ++j) acc[j] += aik * brow[j];
      } else {
        for (std::size_t j = 0; j < m; ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      out.a_[i * m + j] = static_cast<std::uint32_t>(acc[j] % p);
    }
  }
  return out;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
  FpMatrix result = identity(dim_, mod_);
  FpMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::vector<Residue> FpMatrix::mul_row(std::span<const Residue> v) const {
  if (v.size() != dim_) {
    throw std::invalid_argument("row vector length " + std::to_string(v.size()) +
                                " does not match matrix dim " +
                                std::to_string(dim_));
  }
  std::vector<std::uint32_t> in(dim_), raw_out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i].modulus() != mod_) {
      throw std::invalid_argument(
          "row vector modulus mismatch: " + std::to_string(mod_.value()) +
          " vs " + std::to_string(v[i].modulus().value()));
    }
    in[i] = v[i].value();
  }
  mul_row_raw(in, raw_out);
  std::vector<Residue> out;
  out.reserve(dim_);
  for (std::uint32_t x : raw_out) out.emplace_back(x, mod_);
  return out;
}

void FpMatrix::mul_row_raw(std::span<const std::uint32_t> in,
                           std::span<std::uint32_t> out) const {
  const std::size_t m = dim_;
  const std::uint64_t p = mod_.value();
  const bool deferred = p < kDeferredReductionBound;
  std::uint64_t acc[64];
  std::vector<std::uint64_t> heap_acc;
  std::uint64_t* a = acc;
  if (m > 64) {
    heap_acc.assign(m, 0);
    a = heap_acc.data();
  } else {
    std::fill(acc, acc + m, 0);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t vi = in[i];
    if (vi == 0) continue;
    const std::uint32_t* row = &a_[i * m];
    if (deferred) {
      for (std::size_t j = 0; j < m; ++j) a[j] += vi * row[j];
    } else {
      for (std::size_t j = 0; j < m; ++j) a[j] = (a[j] + vi * row[j]) % p;
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    out[j] = static_cast<std::uint32_t>(a[j] % p);
  }
}

FpMatrix jordan_nilpotent(std::size_t m, PrimeModulus p) {
  FpMatrix j(m, p);
  const Residue one(1, p);
  for (std::size_t i = 0; i + 1 < m; ++i) j.set(i, i + 1, one);
  return j;
}

FpMatrix jordan_unipotent(std::size_t m, PrimeModulus p) {
  return FpMatrix::identity(m, p) + jordan_nilpotent(m, p);
}

FpMatrix geometric_sum(const FpMatrix& a, std::uint64_t count) {
  if (count < 1) {
    throw std::invalid_argument("geometric_sum needs count >= 1");
  }
  FpMatrix acc = FpMatrix::identity(a.dim(), a.modulus());
  FpMatrix power = FpMatrix::identity(a.dim(), a.modulus());
  for (std::uint64_t t = 1; t < count; ++t) {
    power = power * a;
    acc = acc + power;
  }
  return acc;
}

std::vector<Residue> superdiagonal_coeffs(const FpMatrix& x) {
  const std::size_t m = x.dim();
  for (std::size_t r = 1; r < m; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if (x.raw(r, c) != 0) {
        throw std::invalid_argument(
            "matrix is not upper triangular: nonzero entry at (" +
            std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }
  }
  std::vector<Residue> coeffs;
  coeffs.reserve(m);
  for (std::size_t d = 0; d < m; ++d) {
    const std::uint32_t c0 = x.raw(0, d);
    for (std::size_t r = 1; r + d < m; ++r) {
      if (x.raw(r, r + d) != c0) {
        throw std::invalid_argument(
            "matrix is not Toeplitz along superdiagonal " + std::to_string(d));
      }
    }
    coeffs.emplace_back(c0, x.modulus());
  }
  return coeffs;
}

bool minimal_poly_degree_check(std::size_t m, PrimeModulus p, std::uint64_t e) {
  if (m < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  if (e < 1) throw std::invalid_argument("exponent must be >= 1");
  const FpMatrix a = jordan_unipotent(m, p);
  const FpMatrix shifted = a - FpMatrix::identity(m, p);
  return shifted.pow(e).is_zero();
}

FpPolynomial FpPolynomial::from_coeffs(PrimeModulus mod,
                                       const std::vector<Residue>& coeffs) {
  FpPolynomial poly(mod);
  poly.c_.reserve(coeffs.size());
  for (const Residue& c : coeffs) {
    if (c.modulus() != mod) {
      throw std::invalid_argument(
          "polynomial coefficients must share one modulus: " +
          std::to_string(mod.value()) + " vs " +
          std::to_string(c.modulus().value()));
    }
    poly.c_.push_back(c.value());
  }
  while (!poly.c_.empty() && poly.c_.back() == 0) poly.c_.pop_back();
  return poly;
}

Residue FpPolynomial::coeff(std::size_t i) const noexcept {
  return Residue(i < c_.size() ? c_[i] : 0, mod_);
}

std::vector<Residue> FpPolynomial::coefficients() const {
  std::vector<Residue> out;
  out.reserve(c_.size());
  for (std::uint32_t c : c_) out.emplace_back(c, mod_);
  return out;
}

FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b) {
  if (a.mod_ != b.mod_) {
    throw std::invalid_argument(
        "polynomial modulus mismatch: " + std::to_string(a.mod_.value()) +
        " vs " + std::to_string(b.mod_.value()));
  }
  FpPolynomial out(a.mod_);
  if (a.c_.empty() || b.c_.empty()) return out;
  const std::uint64_t p = a.mod_.value();
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out.c_[i + j] = static_cast<std::uint32_t>(
          (out.c_[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % p);
    }
  }
  while (!out.c_.empty() && out.c_.back() == 0) out.c_.pop_back();
  return out;
}

FpPolynomial poly_pow_linear(PrimeModulus p, std::uint64_t exponent) {
  const std::uint32_t pv = p.value();
  std::vector<std::uint32_t> c{1 % pv};
  for (std::uint64_t step = 0; step < exponent; ++step) {
    // multiply by (X - 1): coeff[i] <- coeff[i-1] - coeff[i]
    std::vector<std::uint32_t> next(c.size() + 1);
    for (std::size_t i = 0; i < next.size(); ++i) {
      const std::uint32_t shifted = i > 0 ? c[i - 1] : 0;
      const std::uint32_t minus = i < c.size() && c[i] != 0 ? pv - c[i] : 0;
      const std::uint32_t s = shifted + minus;
      next[i] = s >= pv ? s - pv : s;
    }
    c = std::move(next);
  }
  std::vector<Residue> coeffs;
  coeffs.reserve(c.size());
  for (std::uint32_t v : c) coeffs.emplace_back(v, p);
  return FpPolynomial::from_coeffs(p, coeffs);
}

}  // namespace modpascal
