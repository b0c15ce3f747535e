#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "lacunary/sparse_poly.hpp"

namespace lacunary {

/// Parameters of the benchmark family at a given scale.
struct BenchShape {
  unsigned dense_factors = 5;
  unsigned dense_degree = 10;
  unsigned binomials = 3;
  Integer binomial_order;  // r is drawn from [r/2, 3r/2]
  unsigned sparse_monomials = 40;
  Integer sparse_spread;   // shifts drawn from [0, spread]
  unsigned sparse_degree = 20;
};

/// scale * (1e5, 1e6) rounded, at least 1. InputError unless 0 < scale <= 1.
BenchShape bench_shape(const Rational& scale);

/// The pieces before expansion: the product of `factors` is the benchmark.
struct BenchInstance {
  std::vector<SparsePoly> factors;
  SparsePoly product;
};

/// Product of `dense_factors` random dense polynomials of degree
/// `dense_degree`, `binomials` factors x^r - 1, and one sparse factor
/// sum_i x^(e_i) q_i(x) with `sparse_monomials` random shifts and random q_i
/// of degree `sparse_degree`. Coefficients are uniform nonzero in [-10, 10].
/// Deterministic in (scale, seed) on every platform.
BenchInstance bench_instance(const Rational& scale, std::uint64_t seed);
SparsePoly bench_generate(const Rational& scale, std::uint64_t seed);

/// Number of distinct exponents in the expansion when no coefficients
/// cancel: the size of the Minkowski sum of the factor supports.
std::size_t nominal_term_count(const std::vector<SparsePoly>& factors);

}  // namespace lacunary
