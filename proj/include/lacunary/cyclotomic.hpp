#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lacunary/dense_poly.hpp"
#include "lacunary/factor_entry.hpp"
#include "lacunary/sparse_poly.hpp"

namespace lacunary {

/// Euler's totient by trial-division factorization.
std::uint64_t euler_phi(std::uint64_t r);

/// All r in [1, 2d^2] with euler_phi(r) <= d, ascending.
std::vector<std::uint64_t> support_set(unsigned d);

/// phi_r = (x^r - 1) / gcd(x^r - 1, prod of phi_s for s < r in the table).
/// The table must hold every s < r of the support set.
DensePoly cyclotomic_poly(std::uint64_t r, const std::map<std::uint64_t, DensePoly>& table_so_far);

/// phi_r for every r in support_set(d). Immutable once built.
class CycloTable {
 public:
  explicit CycloTable(unsigned d);

  unsigned bound() const { return d_; }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  /// Throws InputError if r is not in the table.
  const DensePoly& poly(std::uint64_t r) const;
  /// r with poly(r) == p, if any.
  std::optional<std::uint64_t> index_of(const DensePoly& p) const;

 private:
  unsigned d_;
  std::vector<std::uint64_t> indices_;
  std::map<std::uint64_t, DensePoly> polys_;
};

/// Process-wide cache; tables are built once per d.
const CycloTable& shared_cyclo_table(unsigned d);

/// phi_r from the binomial product prod_{e | rad(r)} (x^e - 1)^mu(rad(r)/e),
/// substituted x -> x^(r/rad(r)). For orders outside any table.
DensePoly cyclotomic_poly_direct(std::uint64_t r);

/// Every r with phi_r | p, ascending. p must be nonzero with p(0) != 0.
/// Candidates are all r with euler_phi(r) <= deg p; each is screened by
/// evaluating p at a primitive r-th root of unity modulo a prime q = 1 mod r
/// and confirmed by exact division.
std::vector<std::uint64_t> cyclotomic_orders(const DensePoly& p);

/// phi_r | h, decided on the exponent reduction h mod (x^r - 1).
bool divides_cyclotomic(const SparsePoly& h, std::uint64_t r, const DensePoly& phi_r);

/// Multiplicity of phi_r in h via the sparse-derivative chain.
unsigned long multiplicity_chain(const SparsePoly& h, std::uint64_t r, const DensePoly& phi_r);

/// Every (phi_r, m) with r in the table and m = multiplicity_chain(h, r) > 0.
std::vector<FactorEntry> cyclotomic_factors(const SparsePoly& h, const CycloTable& table);

}  // namespace lacunary
