#pragma once

#include <chrono>
#include <cstddef>
#include <span>

#include "lacunary/cluster_list.hpp"
#include "lacunary/dense_poly.hpp"
#include "lacunary/prime_field.hpp"

namespace lacunary {

/// Monic Euclidean gcd in Z/p[x]; gcd(0, v) = monic(v).
ZpPoly gcd_mod_p(const ZpPoly& u, const ZpPoly& v, const PrimeField& field);

/// Primitive gcd with positive leading coefficient, from modular images at
/// primes descending from 2^62 combined by CRT and accepted only after exact
/// trial division into both inputs. gcd(0, 0) = 0.
DensePoly gcd_dense(const DensePoly& u, const DensePoly& v);

/// gcd of all inputs, smallest degree first, stopping as soon as it is 1.
DensePoly gcd_many(std::span<const DensePoly> polys);

/// gcd of the dense cores of every summand. Shifts contribute no power of x
/// as long as some summand starts at exponent 0.
DensePoly gcd_clusters(const ClusterList& clusters, std::size_t max_span = kDefaultMaxSpan);

/// Wall time spent inside gcd_dense by the calling thread since it started.
std::chrono::nanoseconds gcd_time_this_thread();

}  // namespace lacunary
