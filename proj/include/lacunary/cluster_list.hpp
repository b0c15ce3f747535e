#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "lacunary/dense_poly.hpp"
#include "lacunary/sparse_poly.hpp"

namespace lacunary {

inline constexpr std::size_t kDefaultMaxSpan = std::size_t{1} << 20;

/// Ordered decomposition of an integer polynomial into summands, each a
/// contiguous run of its terms: f = S[0] + ... + S[n-1] with disjoint,
/// increasing exponent ranges. gap(i) = val(S[i+1]) - deg(S[i]).
class ClusterList {
 public:
  /// One summand per monomial.
  explicit ClusterList(SparsePoly f);
  /// Summands start at the given term indices (strictly increasing, first 0).
  ClusterList(SparsePoly f, std::vector<std::size_t> starts);

  const SparsePoly& poly() const { return poly_; }
  std::size_t size() const { return starts_.size(); }
  const std::vector<std::size_t>& starts() const { return starts_; }

  const Integer& valuation(std::size_t i) const { return poly_[starts_[i]].exponent; }
  const Integer& degree(std::size_t i) const { return poly_[end(i) - 1].exponent; }
  Integer span(std::size_t i) const { return degree(i) - valuation(i); }
  Integer gap(std::size_t i) const { return valuation(i + 1) - degree(i); }
  std::size_t term_count(std::size_t i) const { return end(i) - starts_[i]; }
  /// ||S[i]||_1
  Integer norm1(std::size_t i) const;
  /// ||S[i] + S[i+1]||_1
  Integer merged_norm1(std::size_t i) const;

  SparsePoly summand(std::size_t i) const;
  /// Throws ResourceLimitError when span(i) > max_span.
  ShiftedCore core(std::size_t i, std::size_t max_span) const;

  /// (t, delta) with t the lowest index minimizing gap(t). Requires size() >= 2.
  std::pair<std::size_t, Integer> min_gap() const;
  /// S[t] <- S[t] + S[t+1]
  void merge(std::size_t t);

 private:
  std::size_t end(std::size_t i) const {
    return i + 1 < starts_.size() ? starts_[i + 1] : poly_.size();
  }
  void insert_gap(std::size_t i);
  void erase_gap(std::size_t i);

  SparsePoly poly_;
  std::vector<std::size_t> starts_;
  std::vector<Integer> prefix_norm_;
  // keyed by (gap, first term index of the left summand); the term index is
  // monotone in the summand position, so the minimum breaks ties low.
  std::set<std::pair<Integer, std::size_t>> gaps_;
};

}  // namespace lacunary
