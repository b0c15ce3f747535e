#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lacunary/dense_poly.hpp"
#include "lacunary/prime_field.hpp"

namespace lacunary {

struct Term {
  Integer exponent;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exponent == b.exponent && a.coeff == b.coeff;
  }
};

/// Lacunary univariate polynomial over Q: a list of nonzero monomials with
/// strictly increasing arbitrary-precision exponents. The empty list is 0.
class SparsePoly {
 public:
  SparsePoly() = default;

  /// Sorts, merges equal exponents and drops zero coefficients.
  /// Throws InputError on a negative exponent.
  static SparsePoly normalize(std::vector<Term> raw);
  static SparsePoly monomial(const Rational& c, const Integer& exponent);
  /// x^shift * a
  static SparsePoly from_dense(const DensePoly& a, const Integer& shift = 0);

  const std::vector<Term>& terms() const { return terms_; }
  const Term& operator[](std::size_t i) const { return terms_[i]; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  /// Throws InputError for the zero polynomial.
  const Integer& degree() const;
  const Integer& valuation() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
};

struct Bounds {
  Integer degree;
  Integer valuation;
};

/// (degree, valuation); InputError on the zero polynomial.
Bounds bounds(const SparsePoly& f);

/// f = sign * content * x^shift * primitive, where `primitive` has integer
/// coefficients with gcd 1, a nonzero constant term and a positive leading
/// coefficient.
struct PrimitiveSplit {
  int sign = 1;
  Rational content;
  Integer shift;
  SparsePoly primitive;
};
PrimitiveSplit content_primitive(const SparsePoly& f);

/// (f / x^val(f))'; the zero polynomial maps to zero.
SparsePoly sparse_derivative(const SparsePoly& f);

/// sum c_j x^(alpha_j mod r), densified to degree < r. Integer f only.
DensePoly reduce_exponents_mod(const SparsePoly& f, std::uint64_t r);

/// Remainder of f modulo m computed by binary powering of x in Q[x]/(m),
/// never expanding f. For monic m the result is the exact integer remainder;
/// otherwise it is the rational remainder scaled by the lcm of its
/// denominators. Zero iff m divides f.
DensePoly sparse_mod(const SparsePoly& f, const DensePoly& m);

/// f mod m over Z/p; p must not divide lc(m) or any denominator of f.
ZpPoly sparse_mod_p(const SparsePoly& f, const DensePoly& m, const PrimeField& field);

/// f(a) mod p by square-and-multiply per monomial.
std::uint64_t eval_mod(const SparsePoly& f, std::uint64_t a, const PrimeField& field);

/// Bit-size: sum over terms of bitlen(num) + bitlen(den) + bitlen(exponent),
/// bitlen(n) = ceil(log2(1 + |n|)).
std::size_t sparse_size(const SparsePoly& f);

/// x^shift * core with core(0) != 0.
struct ShiftedCore {
  Integer shift;
  DensePoly core;
};

/// Densifies an integer polynomial around its valuation. Throws
/// ResourceLimitError when deg - val exceeds max_span.
ShiftedCore to_dense_core(const SparsePoly& f, std::size_t max_span);

/// sum |c_j| for integer f.
Integer norm_l1(const SparsePoly& f);

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(const Rational& c, const SparsePoly& a);

/// x^k * a
SparsePoly shift_up(const SparsePoly& a, const Integer& k);

/// Descending terms, e.g. "3*x^1000 - 1/2*x + 1"; "0" for zero. parse_poly reads it back.
std::string to_string(const SparsePoly& a);

}  // namespace lacunary
