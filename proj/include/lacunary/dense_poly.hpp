#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lacunary {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer polynomial stored as a contiguous coefficient array, index =
/// exponent. The leading coefficient is nonzero unless the polynomial is 0
/// (empty array).
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Integer> coeffs);
  /// Ascending coefficients, e.g. {-1, 0, 1} is x^2 - 1.
  DensePoly(std::initializer_list<long> coeffs);

  static DensePoly monomial(const Integer& c, std::size_t exponent);
  static DensePoly constant(const Integer& c) { return monomial(c, 0); }
  /// x^r - 1
  static DensePoly x_pow_minus_one(std::size_t r);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Zero beyond the degree.
  const Integer& coeff(std::size_t i) const;
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  const Integer& leading() const { return coeffs_.back(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::vector<Integer> release() && { return std::move(coeffs_); }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

DensePoly operator+(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a);
DensePoly operator*(const DensePoly& a, const DensePoly& b);
DensePoly operator*(const Integer& c, const DensePoly& a);

/// a * x^k
DensePoly shift_up(const DensePoly& a, std::size_t k);
DensePoly derivative(const DensePoly& a);
DensePoly pow(const DensePoly& a, unsigned e);

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
Integer content(const DensePoly& a);
/// a / content(a), sign-normalized so the leading coefficient is positive.
DensePoly primitive_part(const DensePoly& a);

/// Exact quotient a / b over Z[x], or nullopt if b does not divide a
/// (including the case where the rational quotient is not integral).
std::optional<DensePoly> exact_quotient(const DensePoly& a, const DensePoly& b);
bool divides(const DensePoly& b, const DensePoly& a);

/// Quotient and remainder by a monic divisor.
std::pair<DensePoly, DensePoly> divrem_monic(const DensePoly& a,
                                             const DensePoly& b);

Integer norm_l1(const DensePoly& a);
Integer norm_l2_squared(const DensePoly& a);
Integer evaluate(const DensePoly& a, const Integer& x);

/// Total order used for canonical factor lists: by degree, then by the
/// ascending coefficient sequence.
bool canonical_less(const DensePoly& a, const DensePoly& b);

/// Human-readable form, highest degree first: "x^2 - 2*x + 2".
std::string to_string(const DensePoly& a, char var = 'x');

}  // namespace lacunary
