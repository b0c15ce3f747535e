#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lacunary/cyclotomic.hpp"
#include "lacunary/factor_entry.hpp"
#include "lacunary/gap_oracle.hpp"
#include "lacunary/partial_factorization.hpp"
#include "lacunary/sparse_poly.hpp"

namespace lacunary {

enum class Strategy {
  /// bottom-up partial factorization, then G factored densely and H scanned
  variant,
  /// single top-down split; multiplicities from sparse-derivative chains
  lenstra,
};

struct PipelineConfig {
  Strategy strategy = Strategy::variant;
  GapConfig gap;
  std::size_t max_span = kDefaultMaxSpan;
  std::uint64_t subset_cap = std::uint64_t{1} << 24;
};

/// f = sign * content * x^x_power * prod(factor^multiplicity) * (cofactor
/// without irreducible factors of degree <= degree_bound other than x).
struct FactorReport {
  int sign = 1;
  Rational content;
  Integer x_power;
  std::vector<FactorEntry> factors;
  unsigned degree_bound = 0;
  /// The partial factorization behind the report (variant strategy only).
  std::optional<SplitResult> split;

  friend bool operator==(const FactorReport& a, const FactorReport& b) {
    return a.sign == b.sign && a.content == b.content && a.x_power == b.x_power &&
           a.factors == b.factors && a.degree_bound == b.degree_bound;
  }
};

struct PhaseStats {
  double total_ms = 0;
  double noncyclotomic_ms = 0;
  double cyclotomic_ms = 0;
  double gcd_ms = 0;
};

/// Irreducible factors of degree <= d of f with exact multiplicities.
/// InputError for f = 0 or d = 0; ResourceLimitError when a dense step would
/// exceed cfg.max_span or the recombination budget.
std::pair<FactorReport, PhaseStats> bounded_degree_factors(const SparsePoly& f, unsigned d,
                                                           const PipelineConfig& cfg = {});

/// Sums multiplicities per factor. InternalError if an entry of h_results
/// is not a cyclotomic polynomial of the table.
std::vector<FactorEntry> merge_eq1(const std::vector<FactorEntry>& g_results,
                                   const std::vector<FactorEntry>& h_results,
                                   const CycloTable& table);

/// Independent check: x_power = val(f), sign and content agree, and for every
/// (l, m) the sparse-derivative chain has l | f^[i] for i < m and l not
/// dividing f^[m] (modular remainders at several 62-bit primes). When the
/// report carries its partial factorization, prod(G) * prod(H) is compared
/// with the primitive part of f at 20 random points modulo a 62-bit prime.
bool verify_report(const SparsePoly& f, const FactorReport& report);

}  // namespace lacunary
