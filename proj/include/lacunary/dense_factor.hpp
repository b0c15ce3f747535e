#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lacunary/dense_poly.hpp"
#include "lacunary/factor_entry.hpp"
#include "lacunary/prime_field.hpp"

namespace lacunary {

/// Landau-Mignotte: ceil(2^m * ||f||_2 * |lc f|), a bound on the coefficients
/// of lc(f)/lc(g) * g for every divisor g of degree <= m. Requires f != 0.
Integer mignotte_bound(const DensePoly& f, long m);

/// Yun's algorithm. f primitive with deg >= 1; returns (p_i, i) with p_i
/// squarefree, pairwise coprime, nonconstant, positive leading coefficient.
std::vector<FactorEntry> squarefree_decomposition(const DensePoly& f);

/// Smallest odd prime p > after with p not dividing lc(f) and f mod p
/// squarefree. f must be squarefree over Q with deg >= 1.
std::uint64_t choose_prime(const DensePoly& f, std::uint64_t after = 2);

/// Complete monic factorization of f mod p, sorted. f mod p must be
/// squarefree of degree >= 1.
std::vector<ZpPoly> factor_mod_p(const DensePoly& f, std::uint64_t p);

/// Monic factors mod `modulus` with lc(f) * prod(factors) = f mod modulus;
/// coefficients in [0, modulus).
struct LiftedFactors {
  Integer modulus;
  std::vector<DensePoly> factors;
};

/// Quadratic Hensel lifting of pairwise coprime monic seeds mod p with
/// monic(f mod p) = prod(seeds), until modulus = p^(2^j) > 2 * target_bound.
/// InputError if the seeds are not coprime or do not multiply to f mod p.
LiftedFactors hensel_lift(const DensePoly& f, const std::vector<ZpPoly>& seeds, std::uint64_t p,
                          const Integer& target_bound);

struct RecombineOptions {
  /// Maximum number of candidate subsets before ResourceLimitError.
  std::uint64_t subset_cap = std::uint64_t{1} << 24;
  /// Only factors of degree <= max_degree are searched for.
  std::optional<long> max_degree;
  /// Index of a lifted factor known to contain only modular factors of
  /// degree > max_degree; it never joins a candidate.
  std::optional<std::size_t> excluded;
};

/// Zassenhaus subset search, cardinality ascending, with symmetric-range
/// coefficients and exact trial division. Returns primitive irreducible
/// factors of f (all of them unless max_degree is set).
std::vector<DensePoly> recombine(const DensePoly& f, const LiftedFactors& lifted,
                                 const RecombineOptions& options = {});

struct FactorOptions {
  std::uint64_t subset_cap = std::uint64_t{1} << 24;
};

/// g = unit * prod(factor^multiplicity). The factor x appears like any other.
struct Factorization {
  Integer unit;
  std::vector<FactorEntry> factors;
};

/// Factorization of g != 0 over Q. With d_filter, only factors of degree
/// <= d_filter are computed and returned (their multiplicities are exact).
Factorization factor_over_Q(const DensePoly& g, std::optional<unsigned> d_filter = std::nullopt,
                            const FactorOptions& options = {});

}  // namespace lacunary
