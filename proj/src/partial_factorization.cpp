#include "lacunary/partial_factorization.hpp"

#include <algorithm>
#include <numeric>

#include "lacunary/errors.hpp"
#include "lacunary/gcd.hpp"

namespace lacunary {

namespace {

// gcd over all summands, or 1 when some summand is too wide to densify.
// Only used to extract factors early; H admission never depends on it.
DensePoly opportunistic_gcd(const ClusterList& clusters, std::size_t max_span) {
  for (std::size_t i = 0; i < clusters.size(); ++i)
    if (clusters.span(i) > static_cast<unsigned long>(max_span)) return DensePoly{1};
  return gcd_clusters(clusters, max_span);
}

}  // namespace

std::pair<std::size_t, Integer> find_min_gap(const ClusterList& clusters) {
  return clusters.min_gap();
}

SparsePoly divide_out(const ClusterList& clusters, const DensePoly& g, std::size_t max_span) {
  if (g.is_zero()) throw InputError("divide_out: zero divisor");
  if (g.is_one()) return clusters.poly();
  std::vector<Term> terms;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    ShiftedCore c = clusters.core(i, max_span);
    auto q = exact_quotient(c.core, g);
    if (!q) throw InternalError("divide_out: divisor does not divide summand " + std::to_string(i));
    SparsePoly part = SparsePoly::from_dense(*q, c.shift);
    terms.insert(terms.end(), part.terms().begin(), part.terms().end());
  }
  return SparsePoly::normalize(std::move(terms));
}

std::vector<std::size_t> gap_split_points(const SparsePoly& f, const GapThreshold& threshold) {
  std::vector<std::size_t> starts;
  if (f.is_zero()) return starts;
  starts.push_back(0);
  for (std::size_t i = 1; i < f.size(); ++i) {
    Integer gap = f[i].exponent - f[i - 1].exponent;
    if (threshold.exceeded_by(gap)) starts.push_back(i);
  }
  return starts;
}

std::vector<SparsePoly> lenstra_split(const SparsePoly& fhat, const GapThreshold& threshold) {
  if (fhat.is_zero()) throw InputError("lenstra_split: zero polynomial");
  ClusterList blocks(fhat, gap_split_points(fhat, threshold));
  std::vector<SparsePoly> out;
  out.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) out.push_back(blocks.summand(i));
  return out;
}

std::vector<SparsePoly> lenstra_split(const SparsePoly& fhat, unsigned d, const GapConfig& cfg) {
  return lenstra_split(fhat, gamma(fhat, d, cfg));
}

SplitResult partial_factorization(const SparsePoly& fhat, unsigned d, const SplitConfig& cfg) {
  if (d == 0) throw InputError("partial_factorization: d must be positive");
  if (fhat.is_zero()) throw InputError("partial_factorization: zero polynomial");
  if (!fhat.is_integral() || fhat.valuation() != 0)
    throw InputError("partial_factorization: primitive integer input with nonzero constant term required");

  SplitResult result;
  SparsePoly current = fhat;
  for (;;) {
    if (current.size() <= 1) break;  // a primitive monomial with val 0 is 1

    ClusterList S(current);
    bool certified_gap = false;  // "b": only monomials so far
    bool extracted = false;
    while (S.size() > 1) {
      if (certified_gap) {
        DensePoly g = opportunistic_gcd(S, cfg.max_span);
        if (g.degree() > 0) {
          current = divide_out(S, g, cfg.max_span);
          result.G.push_back(SparsePoly::from_dense(g));
          extracted = true;
          break;
        }
      }
      auto [t, delta] = find_min_gap(S);
      certified_gap = gamma(S.merged_norm1(t), d, cfg.gap).exceeded_by(delta);
      S.merge(t);
    }
    if (extracted) continue;

    // Exit rule: certify with a single threshold for the whole summand.
    std::vector<std::size_t> starts = gap_split_points(current, gamma(current, d, cfg.gap));
    if (starts.size() < 2) {
      result.G.push_back(std::move(current));
      break;
    }
    ClusterList blocks(current, starts);
    DensePoly g = gcd_clusters(blocks, cfg.max_span);
    if (g.degree() > 0) {
      current = divide_out(blocks, g, cfg.max_span);
      result.G.push_back(SparsePoly::from_dense(g));
      continue;
    }
    result.H.push_back({std::move(current), std::move(starts)});
    break;
  }
  return result;
}

}  // namespace lacunary
