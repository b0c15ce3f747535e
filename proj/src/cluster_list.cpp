#include "lacunary/cluster_list.hpp"

#include <algorithm>

#include "lacunary/errors.hpp"

namespace lacunary {

ClusterList::ClusterList(SparsePoly f) : poly_(std::move(f)) {
  starts_.resize(poly_.size());
  for (std::size_t i = 0; i < starts_.size(); ++i) starts_[i] = i;
  prefix_norm_.resize(poly_.size() + 1);
  for (std::size_t i = 0; i < poly_.size(); ++i)
    prefix_norm_[i + 1] = prefix_norm_[i] + abs(poly_[i].coeff.get_num());
  if (!poly_.is_integral()) throw InputError("ClusterList: integer coefficients required");
  for (std::size_t i = 0; i + 1 < starts_.size(); ++i) insert_gap(i);
}

ClusterList::ClusterList(SparsePoly f, std::vector<std::size_t> starts)
    : ClusterList(std::move(f)) {
  if (starts.empty() || starts.front() != 0 || !std::is_sorted(starts.begin(), starts.end()) ||
      std::adjacent_find(starts.begin(), starts.end()) != starts.end() ||
      starts.back() >= poly_.size())
    throw InputError("ClusterList: invalid summand starts");
  gaps_.clear();
  starts_ = std::move(starts);
  for (std::size_t i = 0; i + 1 < starts_.size(); ++i) insert_gap(i);
}

Integer ClusterList::norm1(std::size_t i) const {
  return prefix_norm_[end(i)] - prefix_norm_[starts_[i]];
}

Integer ClusterList::merged_norm1(std::size_t i) const {
  return prefix_norm_[end(i + 1)] - prefix_norm_[starts_[i]];
}

SparsePoly ClusterList::summand(std::size_t i) const {
  std::vector<Term> terms(poly_.terms().begin() + static_cast<std::ptrdiff_t>(starts_[i]),
                          poly_.terms().begin() + static_cast<std::ptrdiff_t>(end(i)));
  return SparsePoly::normalize(std::move(terms));
}

ShiftedCore ClusterList::core(std::size_t i, std::size_t max_span) const {
  Integer s = span(i);
  if (s > static_cast<unsigned long>(max_span))
    throw ResourceLimitError("summand span " + s.get_str() + " exceeds the limit of " +
                             std::to_string(max_span) + " coefficients");
  std::vector<Integer> c(s.get_ui() + 1);
  for (std::size_t j = starts_[i]; j < end(i); ++j) {
    Integer off = poly_[j].exponent - valuation(i);
    c[off.get_ui()] = poly_[j].coeff.get_num();
  }
  return {valuation(i), DensePoly(std::move(c))};
}

std::pair<std::size_t, Integer> ClusterList::min_gap() const {
  if (size() < 2) throw InputError("min_gap: at least two summands required");
  const auto& [delta, first] = *gaps_.begin();
  auto it = std::lower_bound(starts_.begin(), starts_.end(), first);
  return {static_cast<std::size_t>(it - starts_.begin()), delta};
}

void ClusterList::insert_gap(std::size_t i) { gaps_.emplace(gap(i), starts_[i]); }

void ClusterList::erase_gap(std::size_t i) { gaps_.erase({gap(i), starts_[i]}); }

void ClusterList::merge(std::size_t t) {
  if (t + 1 >= size()) throw InputError("merge: index out of range");
  // gap(t-1) keeps its value and key; only the gaps around S[t+1] change.
  erase_gap(t);
  if (t + 2 < size()) erase_gap(t + 1);
  starts_.erase(starts_.begin() + static_cast<std::ptrdiff_t>(t + 1));
  if (t + 1 < size()) insert_gap(t);
}

}  // namespace lacunary
