#pragma once

// Kronecker substitution: polynomials with nonnegative coefficients are packed
// into one big integer (one fixed-width bit slot per coefficient) so that a
// single GMP multiplication computes the product.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lacunary/dense_poly.hpp"
#include "lacunary/prime_field.hpp"

namespace lacunary::detail {

std::size_t bit_length(std::uint64_t x);
std::size_t bit_length(const Integer& x);

Integer pack_words(std::span<const std::uint64_t> coeffs, std::size_t slot_bits);
/// Coefficients must be nonnegative and fit in slot_bits.
Integer pack_integers(std::span<const Integer> coeffs, std::size_t slot_bits);

std::vector<Integer> unpack_integers(const Integer& packed, std::size_t slot_bits,
                                     std::size_t count);
std::vector<std::uint64_t> unpack_mod(const Integer& packed, std::size_t slot_bits,
                                      std::size_t count, const PrimeField& field);

/// Product of residue polynomials over Z/p.
ZpPoly kronecker_mul(const ZpPoly& a, const ZpPoly& b, const PrimeField& field);
/// Product of polynomials with coefficients in [0, m), reduced into [0, m).
std::vector<Integer> kronecker_mul_mod(std::span<const Integer> a, std::span<const Integer> b,
                                       const Integer& m);

}  // namespace lacunary::detail
