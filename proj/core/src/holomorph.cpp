#include "modpascal/holomorph.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

namespace modpascal {

namespace {

void validate_element(const HolGroup& g, const HolElement& x) {
  if (x.k >= g.alpha_order()) {
    throw std::invalid_argument("element exponent " + std::to_string(x.k) +
                                " out of range for ord(alpha)=" +
                                std::to_string(g.alpha_order()));
  }
  if (x.v.size() != g.dim()) {
    throw std::invalid_argument("element vector length " +
                                std::to_string(x.v.size()) +
                                " does not match dim " +
                                std::to_string(g.dim()));
  }
  for (const Residue& c : x.v) {
    if (c.modulus() != g.prime()) {
      throw std::invalid_argument(
          "element vector modulus mismatch: " +
          std::to_string(c.modulus().value()) + " vs " +
          std::to_string(g.prime().value()));
    }
  }
}

// Flat table of A^0 .. A^(q-1) plus scratch-friendly parameters, used by the
// brute-force enumeration so the inner loops run on raw canonical values.
struct RawGroup {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> powers;  // q blocks of m*m, row-major

  const std::uint32_t* power(std::uint64_t k) const {
    return powers.data() + k * m * m;
  }
};

constexpr std::size_t kMaxBruteDim = 64;

RawGroup build_raw_group(const HolGroup& g) {
  RawGroup rg;
  rg.p = g.prime().value();
  rg.m = g.dim();
  rg.q = g.alpha_order();
  const std::uint64_t entries = rg.q * rg.m * rg.m;
  if (entries > (1ull << 24)) {
    throw std::length_error("alpha power table too large: " +
                            std::to_string(entries) + " entries");
  }
  rg.powers.resize(entries);
  FpMatrix cur = FpMatrix::identity(rg.m, g.prime());
  for (std::uint64_t k = 0; k < rg.q; ++k) {
    std::uint32_t* block = rg.powers.data() + k * rg.m * rg.m;
    for (std::uint32_t r = 0; r < rg.m; ++r) {
      for (std::uint32_t c = 0; c < rg.m; ++c) block[r * rg.m + c] = cur.raw(r, c);
    }
    if (k + 1 < rg.q) cur = cur * g.alpha();
  }
  return rg;
}

// out = (k1, v1) * (k2, v2); out_v may alias v2 but not v1.
void raw_mul(const RawGroup& rg, std::uint64_t k1, const std::uint32_t* v1,
             std::uint64_t k2, const std::uint32_t* v2, std::uint64_t& out_k,
             std::uint32_t* out_v) {
  const std::uint32_t m = rg.m;
  const std::uint64_t p = rg.p;
  out_k = k1 + k2;
  if (out_k >= rg.q) out_k -= rg.q;
  const std::uint32_t* t = rg.power(k2);
  std::uint64_t acc[kMaxBruteDim];
  for (std::uint32_t j = 0; j < m; ++j) acc[j] = v2[j];
  if (p < (1u << 16)) {
    for (std::uint32_t i = 0; i < m; ++i) {
      const std::uint64_t vi = v1[i];
      if (vi == 0) continue;
      const std::uint32_t* row = t + i * m;
      for (std::uint32_t j = 0; j < m; ++j) acc[j] += vi * row[j];
    }
  } else {
    for (std::uint32_t i = 0; i < m; ++i) {
      const std::uint64_t vi = v1[i];
      if (vi == 0) continue;
      const std::uint32_t* row = t + i * m;
      for (std::uint32_t j = 0; j < m; ++j) acc[j] = (acc[j] + vi * row[j]) % p;
    }
  }
  for (std::uint32_t j = 0; j < m; ++j) {
    out_v[j] = static_cast<std::uint32_t>(acc[j] % p);
  }
}

bool raw_is_identity(const RawGroup& rg, std::uint64_t k,
                     const std::uint32_t* v) {
  if (k != 0) return false;
  for (std::uint32_t j = 0; j < rg.m; ++j) {
    if (v[j] != 0) return false;
  }
  return true;
}

// Replaces (k, v) by (k, v)^p via square-and-multiply.
void raw_pow_p(const RawGroup& rg, std::uint64_t& k, std::uint32_t* v) {
  std::uint64_t res_k = 0, base_k = k;
  std::uint32_t res_v[kMaxBruteDim] = {0};
  std::uint32_t base_v[kMaxBruteDim];
  std::uint32_t tmp_v[kMaxBruteDim];
  std::copy(v, v + rg.m, base_v);
  std::uint32_t e = rg.p;
  while (e > 0) {
    if (e & 1) {
      std::uint64_t nk;
      raw_mul(rg, res_k, res_v, base_k, base_v, nk, tmp_v);
      res_k = nk;
      std::copy(tmp_v, tmp_v + rg.m, res_v);
    }
    e >>= 1;
    if (e > 0) {
      std::uint64_t nk;
      raw_mul(rg, base_k, base_v, base_k, base_v, nk, tmp_v);
      base_k = nk;
      std::copy(tmp_v, tmp_v + rg.m, base_v);
    }
  }
  k = res_k;
  std::copy(res_v, res_v + rg.m, v);
}

// Max j over idx in [lo, hi) such that the element of flat index idx has
// order p^j. Flat index: idx = k * p^m + (v written in base p).
std::uint64_t scan_chunk(const RawGroup& rg, std::uint64_t pm,
                         std::uint64_t lo, std::uint64_t hi,
                         std::uint32_t level) {
  std::uint32_t v[kMaxBruteDim];
  std::uint32_t z_v[kMaxBruteDim];
  std::uint64_t k = lo / pm;
  std::uint64_t rem = lo % pm;
  for (std::uint32_t j = 0; j < rg.m; ++j) {
    v[j] = static_cast<std::uint32_t>(rem % rg.p);
    rem /= rg.p;
  }
  std::uint64_t max_j = 0;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    std::uint64_t z_k = k;
    std::copy(v, v + rg.m, z_v);
    std::uint64_t j = 0;
    while (!raw_is_identity(rg, z_k, z_v)) {
      raw_pow_p(rg, z_k, z_v);
      ++j;
      if (j > level + 2ull) {
        throw std::logic_error(
            "element order exceeded p^(n+2); holomorph arithmetic is broken");
      }
    }
    max_j = std::max(max_j, j);
    // odometer step to the next (k, v)
    std::uint32_t pos = 0;
    while (pos < rg.m) {
      if (++v[pos] < rg.p) break;
      v[pos] = 0;
      ++pos;
    }
    if (pos == rg.m) ++k;
  }
  return max_j;
}

}  // namespace

std::uint32_t canonical_n(PrimeModulus p, std::uint32_t m) {
  if (m < 2) {
    throw std::domain_error(
        "canonical_n requires m >= 2 (no level n >= 1 satisfies "
        "p^(n-1) < m <= p^n for m = " +
        std::to_string(m) + ")");
  }
  std::uint32_t n = 1;
  std::uint64_t q = p.value();
  while (q < m) {
    q = checked_pow_u64(p.value(), ++n);
  }
  return n;
}

HolGroup::HolGroup(PrimeModulus p, std::uint32_t m, std::uint32_t n,
                   std::uint64_t alpha_order, FpMatrix alpha,
                   std::uint64_t order)
    : p_(p),
      m_(m),
      n_(n),
      alpha_order_(alpha_order),
      alpha_(std::move(alpha)),
      order_(order) {}

HolGroup hol_group(PrimeModulus p, std::uint32_t m) {
  const std::uint32_t n = canonical_n(p, m);
  const std::uint64_t q = checked_pow_u64(p.value(), n);
  const std::uint64_t order = checked_pow_u64(p.value(), m + n);
  FpMatrix alpha = jordan_unipotent(m, p);
  if (!alpha.pow(q).is_identity() || alpha.pow(q / p.value()).is_identity()) {
    throw std::logic_error(
        "holomorph invariant violated: ord(alpha) is not p^n");
  }
  return HolGroup(p, m, n, q, std::move(alpha), order);
}

FpMatrix HolGroup::alpha_power(std::uint64_t k) const {
  return alpha_.pow(k % alpha_order_);
}

HolElement hol_identity(const HolGroup& g) {
  return HolElement{0, std::vector<Residue>(g.dim(), Residue(0, g.prime()))};
}

HolElement hol_element(const HolGroup& g, std::uint64_t k,
                       const std::vector<std::int64_t>& values) {
  HolElement x{k, {}};
  x.v.reserve(values.size());
  for (std::int64_t value : values) x.v.emplace_back(value, g.prime());
  validate_element(g, x);
  return x;
}

HolElement hol_mul(const HolGroup& g, const HolElement& x,
                   const HolElement& y) {
  validate_element(g, x);
  validate_element(g, y);
  std::uint64_t k = x.k + y.k;
  if (k >= g.alpha_order()) k -= g.alpha_order();
  std::vector<Residue> v = g.alpha_power(y.k).mul_row(x.v);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += y.v[i];
  return HolElement{k, std::move(v)};
}

HolElement hol_inv(const HolGroup& g, const HolElement& x) {
  validate_element(g, x);
  const std::uint64_t q = g.alpha_order();
  const std::uint64_t k = x.k == 0 ? 0 : q - x.k;
  std::vector<Residue> v = g.alpha_power(k).mul_row(x.v);
  for (Residue& c : v) c = -c;
  return HolElement{k, std::move(v)};
}

HolElement hol_pow(const HolGroup& g, const HolElement& x, std::uint64_t e) {
  validate_element(g, x);
  HolElement result = hol_identity(g);
  HolElement base = x;
  while (e > 0) {
    if (e & 1) result = hol_mul(g, result, base);
    e >>= 1;
    if (e > 0) base = hol_mul(g, base, base);
  }
  return result;
}

std::uint64_t element_order(const HolGroup& g, const HolElement& x) {
  validate_element(g, x);
  const HolElement id = hol_identity(g);
  HolElement z = x;
  std::uint64_t order = 1;
  for (std::uint32_t j = 0; j <= g.level() + 2; ++j) {
    if (z == id) return order;
    z = hol_pow(g, z, g.prime().value());
    order *= g.prime().value();
  }
  throw std::logic_error(
      "element order exceeded p^(n+2); holomorph arithmetic is broken");
}

std::uint64_t exponent_formula(const HolGroup& g) {
  const std::uint64_t q = g.alpha_order();
  return g.dim() < q ? q : q * g.prime().value();
}

ExponentScan exponent_brute(const HolGroup& g, std::uint64_t cap) {
  if (g.order() > cap) {
    throw std::length_error("brute-force cap exceeded: |G|=" +
                            std::to_string(g.order()) + ", cap=" +
                            std::to_string(cap));
  }
  const RawGroup rg = build_raw_group(g);
  const std::uint64_t pm = g.order() / g.alpha_order();  // |V| = p^m
  const std::uint64_t total = g.order();

  std::uint64_t max_j = 0;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (total < (1ull << 14) || hw == 1) {
    max_j = scan_chunk(rg, pm, 0, total, g.level());
  } else {
    const std::uint64_t chunks = std::min<std::uint64_t>(4ull * hw, 256);
    const std::uint64_t step = (total + chunks - 1) / chunks;
    std::vector<std::future<std::uint64_t>> futures;
    for (std::uint64_t lo = 0; lo < total; lo += step) {
      const std::uint64_t hi = std::min(lo + step, total);
      futures.push_back(std::async(std::launch::async, [&rg, pm, lo, hi, &g] {
        return scan_chunk(rg, pm, lo, hi, g.level());
      }));
    }
    for (auto& f : futures) max_j = std::max(max_j, f.get());
  }
  return ExponentScan{checked_pow_u64(g.prime().value(),
                                      static_cast<std::uint32_t>(max_j)),
                      total};
}

bool witness_check(const HolGroup& g) {
  if (g.dim() != g.alpha_order()) {
    throw std::domain_error("witness check requires m = p^n, got m=" +
                            std::to_string(g.dim()) + ", p^n=" +
                            std::to_string(g.alpha_order()));
  }
  std::vector<Residue> e1(g.dim(), Residue(0, g.prime()));
  e1[0] = Residue(1, g.prime());
  const HolElement x{1, std::move(e1)};
  const HolElement got = hol_pow(g, x, g.alpha_order());

  std::vector<Residue> em(g.dim(), Residue(0, g.prime()));
  em[g.dim() - 1] = Residue(1, g.prime());
  return got == HolElement{0, std::move(em)};
}

FpMatrix epsilon_endomorphism(const HolGroup& g, std::uint64_t k) {
  const std::uint64_t q = g.alpha_order();
  if (k >= q) {
    throw std::domain_error("epsilon exponent " + std::to_string(k) +
                            " out of range for ord(alpha)=" +
                            std::to_string(q));
  }
  const FpMatrix eps = geometric_sum(g.alpha_power(k), q);
  if (k > 0) {
    // k = p^s * j with gcd(p, j) = 1; cross-check eps = delta^(p^s) for
    // delta = I + A^j + ... + A^((p^n - 1) j).
    std::uint64_t j = k;
    std::uint64_t ps = 1;
    while (j % g.prime().value() == 0) {
      j /= g.prime().value();
      ps *= g.prime().value();
    }
    const FpMatrix delta = geometric_sum(g.alpha_power(j), q);
    if (!(delta.pow(ps) == eps)) {
      throw std::logic_error(
          "epsilon cross-check failed: power-of-delta route disagrees");
    }
  }
  return eps;
}

}  // namespace modpascal
