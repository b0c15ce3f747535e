#include "lacunary/gcd.hpp"

#include <algorithm>
#include <numeric>

#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

thread_local std::chrono::nanoseconds g_gcd_time{0};

class ScopedGcdTimer {
 public:
  ScopedGcdTimer() : start_(std::chrono::steady_clock::now()) {}
  ~ScopedGcdTimer() { g_gcd_time += std::chrono::steady_clock::now() - start_; }
  ScopedGcdTimer(const ScopedGcdTimer&) = delete;
  ScopedGcdTimer& operator=(const ScopedGcdTimer&) = delete;

 private:
  std::chrono::steady_clock::time_point start_;
};

// Fixed descending sequence of primes below 2^62.
class DescendingPrimes {
 public:
  std::uint64_t next() {
    do {
      candidate_ -= 2;
    } while (!is_prime_u64(candidate_));
    return candidate_;
  }

 private:
  std::uint64_t candidate_ = (std::uint64_t{1} << 62) + 1;
};

DensePoly gcd_primitive(const DensePoly& u, const DensePoly& v) {
  if (u.is_constant() || v.is_constant()) return DensePoly{1};
  const DensePoly& big = u.degree() >= v.degree() ? u : v;
  const DensePoly& small = u.degree() >= v.degree() ? v : u;
  // Cheap when the degrees are close; skipped when the trial division would
  // cost more than a modular image.
  const double division_cost = static_cast<double>(big.degree() - small.degree() + 1) *
                               static_cast<double>(small.degree() + 1);
  if (division_cost <= 4.0 * static_cast<double>(big.degree() + 1) && divides(small, big))
    return small;

  Integer lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), u.leading().get_mpz_t(), v.leading().get_mpz_t());

  DescendingPrimes primes;
  long best_degree = small.degree() + 1;
  Integer modulus = 1;
  std::vector<Integer> acc;
  DensePoly previous;
  int agreeing = 0;
  for (;;) {
    const std::uint64_t p = primes.next();
    if (mpz_divisible_ui_p(u.leading().get_mpz_t(), p) ||
        mpz_divisible_ui_p(v.leading().get_mpz_t(), p))
      continue;
    PrimeField field(p);
    ZpPoly image = gcd_mod_p(zp::reduce(u, field), zp::reduce(v, field), field);
    const long dg = zp::degree(image);
    if (dg == 0) return DensePoly{1};
    if (dg > best_degree) continue;  // unlucky prime
    if (dg < best_degree) {
      best_degree = dg;
      modulus = 1;
      acc.assign(static_cast<std::size_t>(dg) + 1, Integer(0));
      previous = DensePoly{};
      agreeing = 0;
    }
    image = zp::scale(image, field.reduce(lc_gcd), field);
    image.resize(static_cast<std::size_t>(dg) + 1, 0);

    // CRT: acc <- acc + modulus * ((image - acc) * modulus^-1 mod p)
    const std::uint64_t m_inv = field.inv(field.reduce(modulus));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      std::uint64_t diff = field.sub(image[i], field.reduce(acc[i]));
      std::uint64_t t = field.mul(diff, m_inv);
      mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), t);
    }
    modulus *= static_cast<unsigned long>(p);
    ++agreeing;

    Integer half = modulus / 2;
    std::vector<Integer> lifted(acc);
    for (auto& c : lifted)
      if (c > half) c -= modulus;
    DensePoly candidate(std::move(lifted));
    if (agreeing >= 2 && candidate == previous) {
      DensePoly g = primitive_part(candidate);
      if (divides(g, small) && divides(g, big)) return g;
    }
    previous = std::move(candidate);
  }
}

}  // namespace

ZpPoly gcd_mod_p(const ZpPoly& u, const ZpPoly& v, const PrimeField& field) {
  return zp::gcd(u, v, field);
}

DensePoly gcd_dense(const DensePoly& u, const DensePoly& v) {
  ScopedGcdTimer timer;
  if (u.is_zero()) return primitive_part(v);
  if (v.is_zero()) return primitive_part(u);
  return gcd_primitive(primitive_part(u), primitive_part(v));
}

DensePoly gcd_many(std::span<const DensePoly> polys) {
  std::vector<std::size_t> order(polys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return polys[a].degree() < polys[b].degree();
  });
  DensePoly g;
  for (std::size_t i : order) {
    g = gcd_dense(g, polys[i]);
    if (g.is_one()) break;
  }
  return g;
}

DensePoly gcd_clusters(const ClusterList& clusters, std::size_t max_span) {
  std::vector<std::size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Integer> spans;
  spans.reserve(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) spans.push_back(clusters.span(i));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return spans[a] < spans[b]; });
  DensePoly g;
  for (std::size_t i : order) {
    if (spans[i] == 0) return DensePoly{1};
    g = gcd_dense(g, clusters.core(i, max_span).core);
    if (g.is_one()) break;
  }
  return g;
}

std::chrono::nanoseconds gcd_time_this_thread() { return g_gcd_time; }

}  // namespace lacunary
