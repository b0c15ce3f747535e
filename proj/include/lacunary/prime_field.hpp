#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace lacunary {

class DensePoly;

/// Arithmetic in Z/p for an odd prime p < 2^62.
class PrimeField {
 public:
  /// Precomputed operand for repeated multiplication by the same residue
  /// (Shoup's trick: one high product and one low product per call).
  struct Multiplier {
    std::uint64_t value;
    std::uint64_t quotient;
  };

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t reduce(const mpz_class& x) const;
  std::uint64_t reduce_signed(std::int64_t x) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }

  Multiplier multiplier(std::uint64_t w) const {
    return {w, static_cast<std::uint64_t>((static_cast<unsigned __int128>(w) << 64) / p_)};
  }
  std::uint64_t mul(std::uint64_t x, Multiplier m) const {
    std::uint64_t q =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m.quotient) >> 64);
    std::uint64_t r = x * m.value - q * p_;
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;
  std::uint64_t pow(std::uint64_t base, const mpz_class& e) const;
  /// Throws InputError on 0.
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Polynomial over Z/p, ascending coefficients, trimmed (empty = 0).
using ZpPoly = std::vector<std::uint64_t>;

namespace zp {

void trim(ZpPoly& a);
inline long degree(const ZpPoly& a) { return static_cast<long>(a.size()) - 1; }

ZpPoly reduce(const DensePoly& a, const PrimeField& field);
/// Coefficients mapped to the symmetric range (-p/2, p/2].
DensePoly lift_symmetric(const ZpPoly& a, const PrimeField& field);

ZpPoly add(const ZpPoly& a, const ZpPoly& b, const PrimeField& field);
ZpPoly sub(const ZpPoly& a, const ZpPoly& b, const PrimeField& field);
ZpPoly scale(const ZpPoly& a, std::uint64_t c, const PrimeField& field);
ZpPoly mul(const ZpPoly& a, const ZpPoly& b, const PrimeField& field);
ZpPoly monic(const ZpPoly& a, const PrimeField& field);
ZpPoly derivative(const ZpPoly& a, const PrimeField& field);

/// Quotient and remainder; b must be nonzero.
std::pair<ZpPoly, ZpPoly> divrem(const ZpPoly& a, const ZpPoly& b, const PrimeField& field);
ZpPoly rem(const ZpPoly& a, const ZpPoly& b, const PrimeField& field);
/// Exact quotient; throws InternalError when b does not divide a.
ZpPoly exact_div(const ZpPoly& a, const ZpPoly& b, const PrimeField& field);

/// Monic gcd; gcd(0, v) = monic(v), gcd(0, 0) = 0.
ZpPoly gcd(ZpPoly a, ZpPoly b, const PrimeField& field);

struct Xgcd {
  ZpPoly g;
  ZpPoly s;
  ZpPoly t;
};
/// s*a + t*b = g with g monic.
Xgcd xgcd(const ZpPoly& a, const ZpPoly& b, const PrimeField& field);

/// Arithmetic modulo a fixed monic polynomial, with a precomputed inverse of
/// the reversed modulus for fast reduction at large degree.
class Modulus {
 public:
  Modulus(ZpPoly f, const PrimeField& field);

  const ZpPoly& poly() const { return f_; }
  long degree() const { return zp::degree(f_); }
  /// Reduce a polynomial of degree < 2 * deg(f).
  ZpPoly reduce(const ZpPoly& a) const;
  ZpPoly mulmod(const ZpPoly& a, const ZpPoly& b) const;
  ZpPoly powmod(const ZpPoly& base, const mpz_class& e) const;

 private:
  ZpPoly f_;
  PrimeField field_;
  ZpPoly inv_rev_;  // rev(f)^-1 mod x^(deg f - 1), empty when unused
};

}  // namespace zp

}  // namespace lacunary
