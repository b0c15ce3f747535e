#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lacunary/cluster_list.hpp"
#include "lacunary/gap_oracle.hpp"
#include "lacunary/sparse_poly.hpp"

namespace lacunary {

struct SplitConfig {
  GapConfig gap;
  std::size_t max_span = kDefaultMaxSpan;
};

/// A member of H together with its certificate: the term indices where the
/// blocks p_1, ..., p_s (s >= 2) start. Every gap between consecutive blocks
/// exceeds gamma(poly, d) and gcd(p_1, ..., p_s) = 1, so poly has no
/// non-cyclotomic irreducible factor of degree <= d.
struct HMember {
  SparsePoly poly;
  std::vector<std::size_t> certificate;
};

/// Partial factorization f = prod(G) * prod(H). Factors of degree <= d of
/// members of G are found by dense factorization; members of H only carry
/// cyclotomic factors of degree <= d.
struct SplitResult {
  std::vector<SparsePoly> G;
  std::vector<HMember> H;
};

/// (t, delta) minimizing delta = val(S[t+1]) - deg(S[t]); ties go to the
/// lowest t. InputError when |S| < 2.
std::pair<std::size_t, Integer> find_min_gap(const ClusterList& clusters);

/// Sum of x^shift_i * (core_i / g). InternalError if g does not divide
/// every summand core.
SparsePoly divide_out(const ClusterList& clusters, const DensePoly& g,
                      std::size_t max_span = kDefaultMaxSpan);

/// Start indices of the maximal decomposition of f whose consecutive gaps
/// all exceed `threshold`. A single entry {0} means no gap qualifies.
std::vector<std::size_t> gap_split_points(const SparsePoly& f, const GapThreshold& threshold);

/// Top-down split: f_1, ..., f_s separated by gaps > gamma(f, d).
std::vector<SparsePoly> lenstra_split(const SparsePoly& fhat, unsigned d, const GapConfig& cfg);
std::vector<SparsePoly> lenstra_split(const SparsePoly& fhat, const GapThreshold& threshold);

/// Bottom-up merge of monomial summands, closest first. A nontrivial gcd of
/// all summands (checked after each merge across a certified gap) is moved to
/// G and the cofactor restarts from its monomials. At loop exit the single
/// remaining summand is split at gaps > gamma(summand, d): a nontrivial gcd of
/// the blocks goes to G (and the cofactor restarts), a trivial gcd admits the
/// summand to H with the split as certificate, and an unsplittable summand
/// goes to G.
/// Requires fhat primitive, integral, fhat(0) != 0 and d >= 1.
SplitResult partial_factorization(const SparsePoly& fhat, unsigned d, const SplitConfig& cfg = {});

}  // namespace lacunary
