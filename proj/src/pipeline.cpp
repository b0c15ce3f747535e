#include "lacunary/pipeline.hpp"

#include <chrono>
#include <random>

#include "lacunary/dense_factor.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/gcd.hpp"

namespace lacunary {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<FactorEntry> dense_small_factors(const SparsePoly& g, unsigned d, const PipelineConfig& cfg) {
  ShiftedCore core = to_dense_core(g, cfg.max_span);
  FactorOptions options;
  options.subset_cap = cfg.subset_cap;
  return factor_over_Q(core.core, d, options).factors;
}

// l | w for non-cyclotomic l of degree <= d: l then divides every block of
// w separated by gaps > gamma(w, d), and conversely.
bool divides_by_blocks(const DensePoly& l, const SparsePoly& w, unsigned d, const PipelineConfig& cfg) {
  for (const SparsePoly& block : lenstra_split(w, d, cfg.gap))
    if (!divides(l, to_dense_core(block, cfg.max_span).core)) return false;
  return true;
}

unsigned long noncyclotomic_multiplicity(const SparsePoly& fhat, const DensePoly& l, unsigned d,
                                         const PipelineConfig& cfg) {
  SparsePoly w = fhat;
  unsigned long m = 0;
  while (!w.is_zero()) {
    w = shift_up(w, Integer(0) - w.valuation());
    if (!divides_by_blocks(l, w, d, cfg)) break;
    ++m;
    w = sparse_derivative(w);
  }
  return m;
}

void variant_factors(const SparsePoly& fhat, unsigned d, const PipelineConfig& cfg,
                     const CycloTable& table, FactorReport& report, PhaseStats& stats) {
  auto t0 = Clock::now();
  SplitResult split = partial_factorization(fhat, d, SplitConfig{cfg.gap, cfg.max_span});
  std::vector<FactorEntry> g_results;
  for (const SparsePoly& g : split.G)
    for (auto& e : dense_small_factors(g, d, cfg)) g_results.push_back(std::move(e));
  canonicalize(g_results);
  stats.noncyclotomic_ms = ms_since(t0);

  auto t1 = Clock::now();
  std::vector<FactorEntry> h_results;
  for (const HMember& h : split.H)
    for (auto& e : cyclotomic_factors(h.poly, table)) h_results.push_back(std::move(e));
  canonicalize(h_results);
  stats.cyclotomic_ms = ms_since(t1);

  report.factors = merge_eq1(g_results, h_results, table);
  report.split = std::move(split);
}

void lenstra_factors(const SparsePoly& fhat, unsigned d, const PipelineConfig& cfg,
                     const CycloTable& table, FactorReport& report, PhaseStats& stats) {
  auto t0 = Clock::now();
  std::vector<DensePoly> cores;
  for (const SparsePoly& block : lenstra_split(fhat, d, cfg.gap))
    cores.push_back(to_dense_core(block, cfg.max_span).core);
  DensePoly g = gcd_many(cores);
  std::vector<FactorEntry> factors;
  if (g.degree() >= 1) {
    FactorOptions options;
    options.subset_cap = cfg.subset_cap;
    for (auto& e : factor_over_Q(g, d, options).factors) {
      if (table.index_of(e.factor)) continue;
      e.multiplicity = noncyclotomic_multiplicity(fhat, e.factor, d, cfg);
      if (e.multiplicity == 0) throw InternalError("lenstra: gcd factor does not divide f");
      factors.push_back(std::move(e));
    }
  }
  stats.noncyclotomic_ms = ms_since(t0);

  auto t1 = Clock::now();
  for (auto& e : cyclotomic_factors(fhat, table)) factors.push_back(std::move(e));
  stats.cyclotomic_ms = ms_since(t1);
  canonicalize(factors);
  report.factors = std::move(factors);
}

// Descending 62-bit primes from a seeded random start.
std::uint64_t random_prime(std::mt19937_64& rng) {
  std::uint64_t p = (rng() >> 2) | (std::uint64_t{1} << 61) | 1;
  while (!is_prime_u64(p)) p -= 2;
  return p;
}

// true if some prime certifies that l does not divide w
bool certainly_not_dividing(const SparsePoly& w, const DensePoly& l,
                            const std::vector<std::uint64_t>& primes) {
  for (std::uint64_t p : primes) {
    if (mpz_divisible_ui_p(l.leading().get_mpz_t(), p)) continue;
    PrimeField field(p);
    if (!sparse_mod_p(w, l, field).empty()) return true;
  }
  return false;
}

}  // namespace

std::vector<FactorEntry> merge_eq1(const std::vector<FactorEntry>& g_results,
                                   const std::vector<FactorEntry>& h_results,
                                   const CycloTable& table) {
  std::vector<FactorEntry> out(g_results);
  for (const auto& e : h_results) {
    if (!table.index_of(e.factor))
      throw InternalError("merge_eq1: non-cyclotomic factor " + to_string(e.factor) + " from H");
    out.push_back(e);
  }
  canonicalize(out);
  return out;
}

std::pair<FactorReport, PhaseStats> bounded_degree_factors(const SparsePoly& f, unsigned d,
                                                           const PipelineConfig& cfg) {
  if (f.is_zero()) throw InputError("bounded_degree_factors: zero polynomial");
  if (d == 0) throw InputError("bounded_degree_factors: d must be positive");
  const auto start = Clock::now();
  const auto gcd_start = gcd_time_this_thread();

  PrimitiveSplit ps = content_primitive(f);
  FactorReport report;
  report.sign = ps.sign;
  report.content = ps.content;
  report.x_power = ps.shift;
  report.degree_bound = d;
  PhaseStats stats;

  const CycloTable& table = shared_cyclo_table(d);
  if (ps.primitive.size() > 1) {
    if (cfg.strategy == Strategy::variant)
      variant_factors(ps.primitive, d, cfg, table, report, stats);
    else
      lenstra_factors(ps.primitive, d, cfg, table, report, stats);
  } else if (cfg.strategy == Strategy::variant) {
    report.split = SplitResult{};
  }

  stats.gcd_ms = std::chrono::duration<double, std::milli>(gcd_time_this_thread() - gcd_start).count();
  stats.total_ms = ms_since(start);
  return {std::move(report), stats};
}

bool verify_report(const SparsePoly& f, const FactorReport& report) {
  if (f.is_zero()) return false;
  PrimitiveSplit ps = content_primitive(f);
  if (report.x_power != ps.shift || report.sign != ps.sign || report.content != ps.content)
    return false;
  const SparsePoly& fhat = ps.primitive;

  std::mt19937_64 rng(0x7665726966u);
  std::vector<std::uint64_t> primes;
  for (int i = 0; i < 4; ++i) primes.push_back(random_prime(rng));

  for (std::size_t k = 0; k < report.factors.size(); ++k) {
    const auto& [l, m] = report.factors[k];
    if (l.degree() < 1 || l.degree() > static_cast<long>(report.degree_bound) || m == 0) return false;
    if (primitive_part(l) != l) return false;
    if (k > 0 && !canonical_less(report.factors[k - 1].factor, l)) return false;
    SparsePoly w = fhat;
    for (unsigned long i = 0; i < m; ++i) {
      if (w.is_zero() || certainly_not_dividing(w, l, primes)) return false;
      w = sparse_derivative(w);
    }
    if (!w.is_zero() && !certainly_not_dividing(w, l, primes)) return false;
  }

  if (report.split) {
    const std::uint64_t p = random_prime(rng);
    PrimeField field(p);
    for (int probe = 0; probe < 20; ++probe) {
      const std::uint64_t a = rng() % p;
      std::uint64_t product = 1;
      for (const auto& g : report.split->G) product = field.mul(product, eval_mod(g, a, field));
      for (const auto& h : report.split->H) product = field.mul(product, eval_mod(h.poly, a, field));
      if (product != eval_mod(fhat, a, field)) return false;
    }
  }
  return true;
}

}  // namespace lacunary
