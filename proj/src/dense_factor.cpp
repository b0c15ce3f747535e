#include "lacunary/dense_factor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "kronecker.hpp"
#include "lacunary/cyclotomic.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/gcd.hpp"

namespace lacunary {

void canonicalize(std::vector<FactorEntry>& factors) {
  std::sort(factors.begin(), factors.end(), [](const FactorEntry& a, const FactorEntry& b) {
    return canonical_less(a.factor, b.factor);
  });
  std::vector<FactorEntry> merged;
  for (auto& e : factors) {
    if (e.multiplicity == 0) continue;
    if (!merged.empty() && merged.back().factor == e.factor)
      merged.back().multiplicity += e.multiplicity;
    else
      merged.push_back(std::move(e));
  }
  factors = std::move(merged);
}

Integer mignotte_bound(const DensePoly& f, long m) {
  if (f.is_zero()) throw InputError("mignotte_bound: zero polynomial");
  if (m < 0) m = 0;
  Integer v = norm_l2_squared(f) * f.leading() * f.leading();
  v <<= static_cast<mp_bitcnt_t>(2 * m);
  Integer s = sqrt(v);
  if (s * s < v) ++s;
  return s;
}

std::vector<FactorEntry> squarefree_decomposition(const DensePoly& f) {
  if (f.degree() < 1) throw InputError("squarefree_decomposition: degree must be positive");
  auto quotient = [](const DensePoly& a, const DensePoly& b) {
    auto q = exact_quotient(a, b);
    if (!q) throw InternalError("squarefree_decomposition: inexact division");
    return std::move(*q);
  };
  const DensePoly pf = primitive_part(f);
  const DensePoly df = derivative(pf);
  const DensePoly a0 = gcd_dense(pf, df);
  DensePoly b = quotient(pf, a0);
  DensePoly c = quotient(df, a0);
  DensePoly d = c - derivative(b);
  std::vector<FactorEntry> out;
  for (unsigned long i = 1; b.degree() > 0; ++i) {
    DensePoly a = gcd_dense(b, d);
    b = quotient(b, a);
    c = quotient(d, a);
    d = c - derivative(b);
    if (a.degree() > 0) out.push_back({primitive_part(a), i});
  }
  return out;
}

namespace {

std::uint64_t next_odd_prime(std::uint64_t after) {
  std::uint64_t p = std::max<std::uint64_t>(after + 1, 3);
  if (p % 2 == 0) ++p;
  while (!is_prime_u64(p)) p += 2;
  return p;
}

bool zp_less(const ZpPoly& a, const ZpPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

ZpPoly x_poly() { return ZpPoly{0, 1}; }

// Distinct-degree factorization of squarefree monic f up to degree
// max_degree. `parts` gets (product of all degree-i factors, i); `rest` is
// the product of the factors above max_degree (1 if none).
void distinct_degree(const ZpPoly& f, long max_degree, const PrimeField& field,
                     std::vector<std::pair<ZpPoly, long>>& parts, ZpPoly& rest) {
  ZpPoly F = f;
  ZpPoly h = x_poly();
  const Integer p(static_cast<unsigned long>(field.modulus()));
  long i = 1;
  for (; i <= max_degree; ++i) {
    if (zp::degree(F) < 2 * i) break;
    zp::Modulus mod(F, field);
    h = mod.powmod(h, p);
    ZpPoly g = zp::gcd(F, zp::sub(h, x_poly(), field), field);
    if (zp::degree(g) > 0) {
      parts.emplace_back(g, i);
      F = zp::exact_div(F, g, field);
      h = zp::rem(h, F, field);
    }
  }
  rest = ZpPoly{1};
  if (zp::degree(F) < 1) return;
  if (zp::degree(F) < 2 * i && zp::degree(F) <= max_degree)
    parts.emplace_back(F, zp::degree(F));  // irreducible
  else
    rest = F;
}

void equal_degree(const ZpPoly& g, long i, const PrimeField& field, std::mt19937_64& rng,
                  std::vector<ZpPoly>& out) {
  const long n = zp::degree(g);
  if (n == i) {
    out.push_back(g);
    return;
  }
  zp::Modulus mod(g, field);
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), field.modulus(), static_cast<unsigned long>(i));
  e = (e - 1) / 2;
  const std::uint64_t p = field.modulus();
  for (;;) {
    ZpPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = rng() % p;
    zp::trim(a);
    if (zp::degree(a) < 1) continue;
    ZpPoly b = zp::sub(mod.powmod(a, e), ZpPoly{1}, field);
    ZpPoly h = zp::gcd(g, b, field);
    const long dh = zp::degree(h);
    if (dh > 0 && dh < n) {
      equal_degree(h, i, field, rng, out);
      equal_degree(zp::exact_div(g, h, field), i, field, rng, out);
      return;
    }
  }
}

struct ModularFactors {
  std::vector<ZpPoly> small;  // irreducible, degree <= bound
  ZpPoly rest;                // product of the factors above the bound
};

ModularFactors modular_factors(const ZpPoly& f_monic, long bound, const PrimeField& field) {
  std::vector<std::pair<ZpPoly, long>> parts;
  ModularFactors out;
  distinct_degree(f_monic, bound, field, parts, out.rest);
  std::mt19937_64 rng(0x6c61637572u);
  for (const auto& [g, i] : parts) equal_degree(g, i, field, rng, out.small);
  std::sort(out.small.begin(), out.small.end(), zp_less);
  return out;
}

ZpPoly monic_image(const DensePoly& f, const PrimeField& field) {
  ZpPoly fp = zp::reduce(f, field);
  if (zp::degree(fp) != f.degree())
    throw InputError("modular image: p divides the leading coefficient");
  return zp::monic(fp, field);
}

// ---- polynomials with coefficients in [0, m) ----

using MPoly = std::vector<Integer>;

void mtrim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void mnormalize(MPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  mtrim(a);
}

MPoly mreduce(const std::vector<Integer>& a, const Integer& m) {
  MPoly r(a);
  mnormalize(r, m);
  return r;
}

MPoly from_zp(const ZpPoly& a) {
  MPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

MPoly madd(const MPoly& a, const MPoly& b, const Integer& m) {
  MPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  mnormalize(r, m);
  return r;
}

MPoly msub(const MPoly& a, const MPoly& b, const Integer& m) {
  MPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  mnormalize(r, m);
  return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) >= 16) {
    MPoly r = detail::kronecker_mul_mod(a, b, m);
    mtrim(r);
    return r;
  }
  MPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  mnormalize(r, m);
  return r;
}

// Division by a monic b.
std::pair<MPoly, MPoly> mdivrem(const MPoly& a, const MPoly& b, const Integer& m) {
  const std::size_t nb = b.size();
  if (a.size() < nb) return {MPoly{}, a};
  MPoly r(a);
  const std::size_t nq = a.size() - nb + 1;
  MPoly q(nq);
  for (std::size_t k = nq; k-- > 0;) {
    Integer& top = r[k + nb - 1];
    mpz_fdiv_r(top.get_mpz_t(), top.get_mpz_t(), m.get_mpz_t());
    if (top == 0) continue;
    q[k] = top;
    for (std::size_t j = 0; j + 1 < nb; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    top = 0;
  }
  r.resize(nb - 1);
  mnormalize(r, m);
  mtrim(q);
  return {std::move(q), std::move(r)};
}

// f = g * h mod p with h monic and s g + t h = 1 mod p; lifts to mod M, a
// power p^(2^j), via the quadratic step. f is monic mod M.
void lift_pair(const MPoly& f, MPoly& g, MPoly& h, MPoly s, MPoly t, const Integer& p,
               const Integer& M) {
  Integer m = p;
  while (m < M) {
    const Integer m2 = m * m;
    const MPoly fm = mreduce(f, m2);
    const MPoly e = msub(fm, mmul(g, h, m2), m2);
    auto [q, r] = mdivrem(mmul(s, e, m2), h, m2);
    MPoly g2 = madd(g, madd(mmul(t, e, m2), mmul(q, g, m2), m2), m2);
    MPoly h2 = madd(h, r, m2);
    if (m2 < M) {
      const MPoly b = msub(madd(mmul(s, g2, m2), mmul(t, h2, m2), m2), MPoly{Integer(1)}, m2);
      auto [c, d] = mdivrem(mmul(s, b, m2), h2, m2);
      s = msub(s, d, m2);
      t = msub(t, madd(mmul(t, b, m2), mmul(c, g2, m2), m2), m2);
    }
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
}

// Lifts every seed; out[i] corresponds to seeds[idx[i]].
void lift_tree(const MPoly& f, const std::vector<ZpPoly>& seeds, std::vector<std::size_t> idx,
               const PrimeField& field, const Integer& M, std::vector<MPoly>& out) {
  if (idx.size() == 1) {
    out[idx[0]] = f;
    return;
  }
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return seeds[a].size() < seeds[b].size(); });
  long total = 0;
  for (std::size_t i : idx) total += zp::degree(seeds[i]);
  std::size_t split = 0;
  long acc = 0;
  while (split + 1 < idx.size() && 2 * (acc + zp::degree(seeds[idx[split]])) <= total)
    acc += zp::degree(seeds[idx[split++]]);
  if (split == 0) split = 1;
  std::vector<std::size_t> low(idx.begin(), idx.begin() + static_cast<long>(split));
  std::vector<std::size_t> high(idx.begin() + static_cast<long>(split), idx.end());

  auto product = [&](const std::vector<std::size_t>& part) {
    ZpPoly r{1};
    for (std::size_t i : part) r = zp::mul(r, seeds[i], field);
    return r;
  };
  ZpPoly hp = product(low);  // the lower-degree side is the divisor
  ZpPoly gp = product(high);
  zp::Xgcd x = zp::xgcd(gp, hp, field);
  if (x.g != ZpPoly{1}) throw InputError("hensel_lift: seeds are not coprime");
  MPoly g = from_zp(gp), h = from_zp(hp);
  lift_pair(f, g, h, from_zp(x.s), from_zp(x.t), Integer(static_cast<unsigned long>(field.modulus())), M);
  lift_tree(g, seeds, high, field, M, out);
  lift_tree(h, seeds, low, field, M, out);
}

DensePoly symmetric(const MPoly& a, const Integer& M) {
  const Integer half = M / 2;
  std::vector<Integer> c(a);
  for (auto& x : c)
    if (x > half) x -= M;
  return DensePoly(std::move(c));
}

}  // namespace

std::uint64_t choose_prime(const DensePoly& f, std::uint64_t after) {
  if (f.degree() < 1) throw InputError("choose_prime: degree must be positive");
  for (std::uint64_t p = next_odd_prime(after);; p = next_odd_prime(p)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    PrimeField field(p);
    ZpPoly fp = zp::reduce(f, field);
    if (zp::degree(zp::gcd(fp, zp::derivative(fp, field), field)) == 0) return p;
  }
}

std::vector<ZpPoly> factor_mod_p(const DensePoly& f, std::uint64_t p) {
  PrimeField field(p);
  const ZpPoly fm = monic_image(f, field);
  if (zp::degree(fm) < 1) throw InputError("factor_mod_p: degree must be positive");
  return modular_factors(fm, zp::degree(fm), field).small;
}

LiftedFactors hensel_lift(const DensePoly& f, const std::vector<ZpPoly>& seeds, std::uint64_t p,
                          const Integer& target_bound) {
  if (seeds.empty()) throw InputError("hensel_lift: no seeds");
  PrimeField field(p);
  const ZpPoly fm = monic_image(f, field);
  ZpPoly prod{1};
  for (const auto& s : seeds) {
    if (zp::degree(s) < 1 || s.back() != 1) throw InputError("hensel_lift: seeds must be monic and nonconstant");
    prod = zp::mul(prod, s, field);
  }
  if (prod != fm) throw InputError("hensel_lift: seeds do not multiply to f mod p");

  const Integer P(static_cast<unsigned long>(p));
  Integer M = P;
  while (M <= 2 * target_bound) M *= M;

  Integer lc_inv;
  if (!mpz_invert(lc_inv.get_mpz_t(), f.leading().get_mpz_t(), M.get_mpz_t()))
    throw InputError("hensel_lift: leading coefficient not invertible");
  MPoly fmon(f.coeffs());
  for (auto& c : fmon) c *= lc_inv;
  mnormalize(fmon, M);

  std::vector<MPoly> lifted(seeds.size());
  std::vector<std::size_t> idx(seeds.size());
  std::iota(idx.begin(), idx.end(), 0);
  lift_tree(fmon, seeds, idx, field, M, lifted);

  LiftedFactors out{M, {}};
  for (auto& l : lifted) out.factors.emplace_back(std::move(l));
  return out;
}

std::vector<DensePoly> recombine(const DensePoly& f, const LiftedFactors& lifted,
                                 const RecombineOptions& options) {
  DensePoly F = primitive_part(f);
  if (F.degree() < 1) return {};
  const Integer& M = lifted.modulus;
  const long max_degree = options.max_degree.value_or(F.degree());
  const bool has_excluded = options.excluded.has_value();

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < lifted.factors.size(); ++i)
    if (!has_excluded || i != *options.excluded) active.push_back(i);
  std::stable_sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
    return lifted.factors[a].degree() < lifted.factors[b].degree();
  });

  // Divisibility screen at a fixed large prime before exact division.
  const PrimeField screen((std::uint64_t{1} << 61) - 1);

  std::vector<DensePoly> found;
  std::uint64_t tried = 0;
  std::vector<std::size_t> chosen;

  auto try_subset = [&]() -> bool {
    if (++tried > options.subset_cap)
      throw ResourceLimitError("recombine: subset budget of " + std::to_string(options.subset_cap) +
                               " exceeded");
    const Integer& lc = F.leading();
    const Integer& f0 = F[0];
    if (f0 != 0) {
      Integer c = lc % M;
      for (std::size_t i : chosen) c = (c * lifted.factors[active[i]].coeff(0)) % M;
      if (c > M / 2) c -= M;
      if (c == 0) return false;
      Integer target = lc * f0;
      if (!mpz_divisible_p(target.get_mpz_t(), c.get_mpz_t())) return false;
    }
    MPoly cand{lc};
    mnormalize(cand, M);
    for (std::size_t i : chosen) cand = mmul(cand, MPoly(lifted.factors[active[i]].coeffs()), M);
    DensePoly g = primitive_part(symmetric(cand, M));
    if (g.degree() < 1) return false;
    if (!zp::rem(zp::reduce(F, screen), zp::reduce(g, screen), screen).empty()) return false;
    auto q = exact_quotient(F, g);
    if (!q) return false;
    found.push_back(g);
    F = std::move(*q);
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < active.size(); ++k)
      if (std::find(chosen.begin(), chosen.end(), k) == chosen.end()) next.push_back(active[k]);
    active = std::move(next);
    return true;
  };

  // Depth-first over index-ascending subsets of size c with degree sum <= max_degree.
  std::function<bool(std::size_t, std::size_t, long)> search = [&](std::size_t start, std::size_t c,
                                                                   long degree) -> bool {
    if (chosen.size() == c) return try_subset();
    for (std::size_t k = start; k + (c - chosen.size()) <= active.size(); ++k) {
      const long dk = lifted.factors[active[k]].degree();
      // active is degree-ascending, so later picks only get larger
      if (degree + dk * static_cast<long>(c - chosen.size()) > max_degree) break;
      chosen.push_back(k);
      const bool hit = search(k + 1, c, degree + dk);
      chosen.pop_back();
      if (hit) return true;
    }
    return false;
  };

  std::size_t c = 1;
  while (c <= active.size()) {
    if (!has_excluded && 2 * c > active.size() && max_degree >= F.degree()) break;
    if (!search(0, c, 0)) ++c;
  }
  if (!has_excluded && F.degree() > 0 && F.degree() <= max_degree) found.push_back(F);
  return found;
}

namespace {

// Irreducible factors of degree <= bound (all if unset) of a primitive,
// squarefree, non-cyclotomic polynomial with nonzero constant term.
std::vector<DensePoly> zassenhaus(const DensePoly& N, std::optional<long> bound,
                                  const FactorOptions& options) {
  if (N.degree() < 1) return {};
  if (N.degree() == 1) {
    if (bound && *bound < 1) return {};
    return {N};
  }
  const bool bounded = bound && *bound < N.degree();
  const long target = bounded ? *bound : N.degree();
  const int attempts = N.degree() <= 1000 ? 3 : 2;

  std::uint64_t best_p = 0;
  ModularFactors best;
  std::size_t best_count = 0;
  std::uint64_t p = 2;
  for (int a = 0; a < attempts; ++a) {
    p = choose_prime(N, p);
    PrimeField field(p);
    ModularFactors mf = modular_factors(monic_image(N, field), target, field);
    const std::size_t count = mf.small.size();
    if (bounded && count == 0) return {};
    if (!bounded && count == 1) return {N};
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best = std::move(mf);
      best_count = count;
    }
  }

  std::vector<ZpPoly> seeds = best.small;
  std::optional<std::size_t> excluded;
  if (zp::degree(best.rest) >= 1) {
    excluded = seeds.size();
    seeds.push_back(best.rest);
  }
  const Integer B = mignotte_bound(N, std::min(target, N.degree()));
  LiftedFactors lifted = hensel_lift(N, seeds, best_p, B);
  RecombineOptions ro;
  ro.subset_cap = options.subset_cap;
  if (bounded) ro.max_degree = target;
  ro.excluded = excluded;
  return recombine(N, lifted, ro);
}

// Irreducible factors (degree <= bound if set) of a primitive squarefree P
// with P(0) != 0. Cyclotomic factors are split off first: they break into
// many small pieces modulo every prime.
std::vector<DensePoly> factor_squarefree(const DensePoly& P, std::optional<long> bound,
                                         const FactorOptions& options) {
  std::vector<DensePoly> out;
  if (P.degree() < 1) return out;
  DensePoly cyclo{1};
  for (std::uint64_t r : cyclotomic_orders(P)) {
    DensePoly phi = cyclotomic_poly_direct(r);
    if (!bound || phi.degree() <= *bound) out.push_back(phi);
    cyclo = cyclo * phi;
  }
  DensePoly N = P;
  if (cyclo.degree() > 0) {
    auto q = exact_quotient(P, cyclo);
    if (!q) throw InternalError("factor_over_Q: cyclotomic part does not divide");
    N = std::move(*q);
  }
  for (auto& g : zassenhaus(N, bound, options)) out.push_back(std::move(g));
  return out;
}

}  // namespace

Factorization factor_over_Q(const DensePoly& g, std::optional<unsigned> d_filter,
                            const FactorOptions& options) {
  if (g.is_zero()) throw InputError("factor_over_Q: zero polynomial");
  Factorization out;
  std::size_t v = 0;
  while (g[v] == 0) ++v;
  std::vector<Integer> shifted(g.coeffs().begin() + static_cast<long>(v), g.coeffs().end());
  DensePoly core(std::move(shifted));
  out.unit = content(core);
  if (sgn(core.leading()) < 0) out.unit = -out.unit;
  if (v > 0 && (!d_filter || *d_filter >= 1)) out.factors.push_back({DensePoly{0, 1}, v});
  core = primitive_part(core);

  if (core.degree() >= 1) {
    if (!d_filter || static_cast<long>(*d_filter) >= core.degree()) {
      for (const auto& [part, mult] : squarefree_decomposition(core))
        for (auto& f : factor_squarefree(part, std::nullopt, options))
          out.factors.push_back({std::move(f), mult});
    } else {
      const long bound = static_cast<long>(*d_filter);
      DensePoly rep = gcd_dense(core, derivative(core));
      auto sqfree = exact_quotient(core, rep);
      if (!sqfree) throw InternalError("factor_over_Q: inexact squarefree quotient");
      for (auto& f : factor_squarefree(*sqfree, bound, options)) {
        unsigned long m = 1;
        while (rep.degree() >= f.degree()) {
          auto q = exact_quotient(rep, f);
          if (!q) break;
          rep = std::move(*q);
          ++m;
        }
        out.factors.push_back({std::move(f), m});
      }
    }
  }
  canonicalize(out.factors);
  return out;
}

}  // namespace lacunary
