#include "lacunary/cyclotomic.hpp"

#include <cmath>
#include <memory>
#include <mutex>

#include "lacunary/errors.hpp"
#include "lacunary/gcd.hpp"

namespace lacunary {

std::uint64_t euler_phi(std::uint64_t r) {
  if (r == 0) throw InputError("euler_phi: r must be positive");
  std::uint64_t result = r;
  std::uint64_t n = r;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> support_set(unsigned d) {
  if (d == 0) throw InputError("support_set: d must be positive");
  std::vector<std::uint64_t> r;
  const std::uint64_t limit = 2ull * d * d;
  for (std::uint64_t i = 1; i <= limit; ++i)
    if (euler_phi(i) <= d) r.push_back(i);
  return r;
}

DensePoly cyclotomic_poly(std::uint64_t r, const std::map<std::uint64_t, DensePoly>& table_so_far) {
  if (r == 0) throw InputError("cyclotomic_poly: r must be positive");
  DensePoly xr = DensePoly::x_pow_minus_one(r);
  DensePoly product{1};
  for (const auto& [s, phi] : table_so_far) {
    if (s >= r) break;
    product = product * phi;
  }
  DensePoly g = gcd_dense(xr, product);
  auto q = exact_quotient(xr, g);
  if (!q) throw InternalError("cyclotomic_poly: inexact division for r = " + std::to_string(r));
  return primitive_part(*q);
}

CycloTable::CycloTable(unsigned d) : d_(d), indices_(support_set(d)) {
  // Same construction as cyclotomic_poly, with the product kept incrementally.
  DensePoly product{1};
  for (std::uint64_t r : indices_) {
    DensePoly xr = DensePoly::x_pow_minus_one(r);
    DensePoly g = gcd_dense(xr, product);
    auto q = exact_quotient(xr, g);
    if (!q) throw InternalError("CycloTable: inexact division for r = " + std::to_string(r));
    DensePoly phi = primitive_part(*q);
    if (static_cast<std::uint64_t>(phi.degree()) != euler_phi(r))
      throw InternalError("CycloTable: degree mismatch for r = " + std::to_string(r));
    product = product * phi;
    polys_.emplace(r, std::move(phi));
  }
}

const DensePoly& CycloTable::poly(std::uint64_t r) const {
  auto it = polys_.find(r);
  if (it == polys_.end()) throw InputError("CycloTable: r = " + std::to_string(r) + " not in table");
  return it->second;
}

std::optional<std::uint64_t> CycloTable::index_of(const DensePoly& p) const {
  for (const auto& [r, phi] : polys_)
    if (phi == p) return r;
  return std::nullopt;
}

const CycloTable& shared_cyclo_table(unsigned d) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CycloTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<CycloTable>(d);
  return *slot;
}

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= r; ++q) {
    if (r % q != 0) continue;
    out.push_back(q);
    while (r % q == 0) r /= q;
  }
  if (r > 1) out.push_back(r);
  return out;
}

// a * (x^e - 1)
std::vector<Integer> times_binomial(const std::vector<Integer>& a, std::size_t e) {
  std::vector<Integer> out(a.size() + e);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + e] += a[i];
    out[i] -= a[i];
  }
  return out;
}

// a / (x^e - 1), exact
std::vector<Integer> over_binomial(const std::vector<Integer>& a, std::size_t e) {
  if (a.size() <= e) throw InternalError("cyclotomic_poly_direct: inexact binomial division");
  const std::size_t nq = a.size() - e;
  std::vector<Integer> q(nq);
  for (std::size_t i = nq; i-- > 0;) {
    q[i] = a[i + e];
    if (i + e < nq) q[i] += q[i + e];
  }
  for (std::size_t i = 0; i < e; ++i)
    if (a[i] != -q[i]) throw InternalError("cyclotomic_poly_direct: inexact binomial division");
  return q;
}

// Smallest bound B >= 64 with euler_phi(r) > n for every r >= B, from
// phi(r) > r / (e^g lnln r + 3 / lnln r), increasing for r >= 16.
std::uint64_t totient_search_bound(std::uint64_t n) {
  auto lower = [](double r) {
    const double ll = std::log(std::log(r));
    return r / (1.7811 * ll + 3.0 / ll);
  };
  std::uint64_t b = 64;
  while (lower(static_cast<double>(b)) <= static_cast<double>(n) + 1.0) b *= 2;
  std::uint64_t lo = b / 2, hi = b;
  while (lo + 1 < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (lower(static_cast<double>(mid)) > static_cast<double>(n) + 1.0) hi = mid;
    else lo = mid;
  }
  return std::max<std::uint64_t>(hi, 64);
}

// Coefficients split into 32-bit chunks (below any 62-bit prime) so that
// evaluation mod q needs no wide reductions.
class ChunkedPoly {
 public:
  explicit ChunkedPoly(const DensePoly& p) : n_(p.size()), negative_(p.size()) {
    std::size_t bits = 1;
    for (const Integer& c : p.coeffs()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    chunks_ = (bits + 31) / 32;
    data_.assign(chunks_ * n_, 0);
    Integer a;
    for (std::size_t i = 0; i < n_; ++i) {
      negative_[i] = sgn(p[i]) < 0;
      a = abs(p[i]);
      for (std::size_t j = 0; j < chunks_ && a != 0; ++j) {
        data_[j * n_ + i] = static_cast<std::uint32_t>(mpz_get_ui(a.get_mpz_t()) & 0xffffffffu);
        a >>= 32;
      }
    }
  }

  std::uint64_t evaluate(std::uint64_t w, const PrimeField& field) const {
    const std::uint64_t q = field.modulus();
    const auto wm = field.multiplier(w);
    const auto base = field.multiplier(field.pow(2, std::uint64_t{32}));
    std::uint64_t total = 0;
    for (std::size_t j = chunks_; j-- > 0;) {
      const std::uint32_t* row = data_.data() + j * n_;
      std::uint64_t acc = 0;
      for (std::size_t i = n_; i-- > 0;) {
        std::uint64_t c = row[i];
        if (negative_[i] && c != 0) c = q - c;
        acc = field.add(field.mul(acc, wm), c);
      }
      total = field.add(field.mul(total, base), acc);
    }
    return total;
  }

 private:
  std::size_t n_;
  std::size_t chunks_ = 1;
  std::vector<std::uint32_t> data_;
  std::vector<bool> negative_;
};

// Prime q = 1 mod r below 2^62 and an element of order exactly r.
std::pair<std::uint64_t, std::uint64_t> root_of_unity(std::uint64_t r) {
  const std::vector<std::uint64_t> primes = prime_divisors(r);
  for (std::uint64_t k = ((std::uint64_t{1} << 62) - 2) / r; k > 0; --k) {
    const std::uint64_t q = k * r + 1;
    if (q < 3 || !is_prime_u64(q)) continue;
    PrimeField field(q);
    for (std::uint64_t a = 2; a < q; ++a) {
      const std::uint64_t w = field.pow(a, (q - 1) / r);
      bool primitive = true;
      for (std::uint64_t l : primes)
        if (field.pow(w, r / l) == 1) {
          primitive = false;
          break;
        }
      if (primitive) return {q, w};
    }
  }
  throw InternalError("root_of_unity: no prime found for r = " + std::to_string(r));
}

}  // namespace

DensePoly cyclotomic_poly_direct(std::uint64_t r) {
  if (r == 0) throw InputError("cyclotomic_poly_direct: r must be positive");
  const std::vector<std::uint64_t> primes = prime_divisors(r);
  std::uint64_t rad = 1;
  for (std::uint64_t l : primes) rad *= l;
  const std::size_t w = primes.size();
  std::vector<Integer> acc{Integer(1)};
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << w); ++mask) {
      if (static_cast<int>(__builtin_popcountll(mask) % 2) != pass) continue;
      std::uint64_t e = rad;
      for (std::size_t i = 0; i < w; ++i)
        if (mask >> i & 1) e /= primes[i];
      acc = pass == 0 ? times_binomial(acc, e) : over_binomial(acc, e);
    }
  }
  const std::uint64_t stretch = r / rad;
  std::vector<Integer> out((acc.size() - 1) * stretch + 1);
  for (std::size_t i = 0; i < acc.size(); ++i) out[i * stretch] = acc[i];
  return DensePoly(std::move(out));
}

std::vector<std::uint64_t> cyclotomic_orders(const DensePoly& p) {
  if (p.is_zero() || p[0] == 0) throw InputError("cyclotomic_orders: need p(0) != 0");
  std::vector<std::uint64_t> out;
  if (p.degree() < 1) return out;
  const std::uint64_t n = static_cast<std::uint64_t>(p.degree());
  const std::uint64_t bound = totient_search_bound(n);

  std::vector<std::uint64_t> phi(bound);
  for (std::uint64_t i = 0; i < bound; ++i) phi[i] = i;
  for (std::uint64_t i = 2; i < bound; ++i)
    if (phi[i] == i)
      for (std::uint64_t j = i; j < bound; j += i) phi[j] -= phi[j] / i;

  const ChunkedPoly chunked(p);
  for (std::uint64_t r = 1; r < bound; ++r) {
    if (phi[r] > n) continue;
    auto [q, w] = root_of_unity(r);
    PrimeField field(q);
    if (chunked.evaluate(w, field) != 0) continue;
    if (divides(cyclotomic_poly_direct(r), p)) out.push_back(r);
  }
  return out;
}

bool divides_cyclotomic(const SparsePoly& h, std::uint64_t r, const DensePoly& phi_r) {
  DensePoly reduced = reduce_exponents_mod(h, r);
  if (reduced.is_zero()) return true;
  return divrem_monic(reduced, phi_r).second.is_zero();
}

unsigned long multiplicity_chain(const SparsePoly& h, std::uint64_t r, const DensePoly& phi_r) {
  if (h.is_zero()) throw InputError("multiplicity_chain: zero polynomial");
  // phi_r is coprime to x, so dividing out x^val leaves the multiplicity unchanged.
  SparsePoly w = shift_up(h, Integer(0) - h.valuation());
  unsigned long m = 0;
  while (!w.is_zero() && divides_cyclotomic(w, r, phi_r)) {
    ++m;
    w = sparse_derivative(w);
  }
  return m;
}

std::vector<FactorEntry> cyclotomic_factors(const SparsePoly& h, const CycloTable& table) {
  std::vector<FactorEntry> out;
  for (std::uint64_t r : table.indices()) {
    const DensePoly& phi = table.poly(r);
    unsigned long m = multiplicity_chain(h, r, phi);
    if (m > 0) out.push_back({phi, m});
  }
  canonicalize(out);
  return out;
}

}  // namespace lacunary
