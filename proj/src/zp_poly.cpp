#include <algorithm>

#include "kronecker.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/prime_field.hpp"

namespace lacunary::zp {

namespace {

constexpr std::size_t kKroneckerThreshold = 40;
constexpr long kFastReductionThreshold = 64;

ZpPoly truncate(ZpPoly a, std::size_t n) {
  if (a.size() > n) a.resize(n);
  trim(a);
  return a;
}

ZpPoly reversed(const ZpPoly& a, std::size_t len) {
  ZpPoly r(len, 0);
  for (std::size_t i = 0; i < len && i < a.size(); ++i) r[len - 1 - i] = a[i];
  return r;
}

// Inverse of h modulo x^n by Newton iteration; h(0) must be nonzero.
ZpPoly series_inverse(const ZpPoly& h, std::size_t n, const PrimeField& field) {
  ZpPoly g{field.inv(h[0])};
  std::size_t k = 1;
  while (k < n) {
    k = std::min(2 * k, n);
    ZpPoly hg = truncate(mul(truncate(h, k), g, field), k);
    // 2 - h*g
    ZpPoly e(k, 0);
    for (std::size_t i = 0; i < hg.size(); ++i) e[i] = field.neg(hg[i]);
    e[0] = field.add(e[0], 2 % field.modulus());
    trim(e);
    g = truncate(mul(g, e, field), k);
  }
  return g;
}

}  // namespace

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly reduce(const DensePoly& a, const PrimeField& field) {
  ZpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field.reduce(a[i]);
  trim(r);
  return r;
}

DensePoly lift_symmetric(const ZpPoly& a, const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  std::vector<Integer> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > p / 2) {
      c[i] = Integer(static_cast<unsigned long>(p - a[i]));
      c[i] = -c[i];
    } else {
      c[i] = Integer(static_cast<unsigned long>(a[i]));
    }
  }
  return DensePoly(std::move(c));
}

ZpPoly add(const ZpPoly& a, const ZpPoly& b, const PrimeField& field) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = field.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

ZpPoly sub(const ZpPoly& a, const ZpPoly& b, const PrimeField& field) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = field.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

ZpPoly scale(const ZpPoly& a, std::uint64_t c, const PrimeField& field) {
  if (c == 0) return {};
  auto m = field.multiplier(c);
  ZpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field.mul(a[i], m);
  trim(r);
  return r;
}

ZpPoly mul(const ZpPoly& a, const ZpPoly& b, const PrimeField& field) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) >= kKroneckerThreshold)
    return detail::kronecker_mul(a, b, field);
  const ZpPoly& outer = a.size() <= b.size() ? a : b;
  const ZpPoly& inner = a.size() <= b.size() ? b : a;
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (outer[i] == 0) continue;
    auto m = field.multiplier(outer[i]);
    std::uint64_t* dst = r.data() + i;
    for (std::size_t j = 0; j < inner.size(); ++j) dst[j] = field.add(dst[j], field.mul(inner[j], m));
  }
  trim(r);
  return r;
}

ZpPoly monic(const ZpPoly& a, const PrimeField& field) {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, field.inv(a.back()), field);
}

ZpPoly derivative(const ZpPoly& a, const PrimeField& field) {
  if (a.size() <= 1) return {};
  ZpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = field.mul(a[i], i % field.modulus());
  trim(r);
  return r;
}

namespace {

// In-place remainder of `r` by monic `b`; optionally records the quotient.
void reduce_by_monic(ZpPoly& r, const ZpPoly& b, const PrimeField& field, ZpPoly* quotient) {
  const std::size_t nb = b.size();
  if (r.size() < nb) {
    if (quotient) quotient->clear();
    return;
  }
  const std::size_t nq = r.size() - nb + 1;
  if (quotient) quotient->assign(nq, 0);
  for (std::size_t k = nq; k-- > 0;) {
    const std::uint64_t q = r[k + nb - 1];
    if (q == 0) continue;
    if (quotient) (*quotient)[k] = q;
    auto m = field.multiplier(field.neg(q));
    std::uint64_t* dst = r.data() + k;
    for (std::size_t j = 0; j + 1 < nb; ++j) dst[j] = field.add(dst[j], field.mul(b[j], m));
    dst[nb - 1] = 0;
  }
  r.resize(nb - 1);
  trim(r);
  if (quotient) trim(*quotient);
}

}  // namespace

std::pair<ZpPoly, ZpPoly> divrem(const ZpPoly& a, const ZpPoly& b, const PrimeField& field) {
  if (b.empty()) throw InputError("zp::divrem: division by zero");
  const std::uint64_t lead = b.back();
  ZpPoly bm = monic(b, field);
  ZpPoly r = a;
  ZpPoly q;
  reduce_by_monic(r, bm, field, &q);
  if (lead != 1) q = scale(q, field.inv(lead), field);
  return {std::move(q), std::move(r)};
}

ZpPoly rem(const ZpPoly& a, const ZpPoly& b, const PrimeField& field) {
  if (b.empty()) throw InputError("zp::rem: division by zero");
  ZpPoly bm = monic(b, field);
  ZpPoly r = a;
  reduce_by_monic(r, bm, field, nullptr);
  return r;
}

ZpPoly exact_div(const ZpPoly& a, const ZpPoly& b, const PrimeField& field) {
  auto [q, r] = divrem(a, b, field);
  if (!r.empty()) throw InternalError("zp::exact_div: inexact division");
  return q;
}

ZpPoly gcd(ZpPoly a, ZpPoly b, const PrimeField& field) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    b = monic(b, field);
    reduce_by_monic(a, b, field, nullptr);
    std::swap(a, b);
  }
  return monic(a, field);
}

Xgcd xgcd(const ZpPoly& a, const ZpPoly& b, const PrimeField& field) {
  ZpPoly r0 = a, r1 = b;
  ZpPoly s0{1}, s1{};
  ZpPoly t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, field);
    ZpPoly s2 = sub(s0, mul(q, s1, field), field);
    ZpPoly t2 = sub(t0, mul(q, t1, field), field);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  std::uint64_t inv = field.inv(r0.back());
  return {scale(r0, inv, field), scale(s0, inv, field), scale(t0, inv, field)};
}

Modulus::Modulus(ZpPoly f, const PrimeField& field) : f_(std::move(f)), field_(field) {
  trim(f_);
  if (f_.empty()) throw InputError("zp::Modulus: zero modulus");
  f_ = monic(f_, field_);
  const long n = zp::degree(f_);
  if (n >= kFastReductionThreshold)
    inv_rev_ = series_inverse(reversed(f_, f_.size()), static_cast<std::size_t>(n - 1), field_);
}

ZpPoly Modulus::reduce(const ZpPoly& a) const {
  const long n = zp::degree(f_);
  const long da = zp::degree(a);
  if (da < n) return a;
  if (inv_rev_.empty() || da > 2 * n - 2) {
    ZpPoly r = a;
    reduce_by_monic(r, f_, field_, nullptr);
    return r;
  }
  const std::size_t m = static_cast<std::size_t>(da - n);
  ZpPoly ra = reversed(a, a.size());
  ra.resize(m + 1);
  trim(ra);
  ZpPoly q_rev = truncate(mul(ra, truncate(inv_rev_, m + 1), field_), m + 1);
  ZpPoly q = reversed(q_rev, m + 1);
  trim(q);
  ZpPoly qf = truncate(mul(q, f_, field_), static_cast<std::size_t>(n));
  ZpPoly low = truncate(a, static_cast<std::size_t>(n));
  return sub(low, qf, field_);
}

ZpPoly Modulus::mulmod(const ZpPoly& a, const ZpPoly& b) const {
  return reduce(mul(a, b, field_));
}

ZpPoly Modulus::powmod(const ZpPoly& base, const mpz_class& e) const {
  if (e < 0) throw InputError("zp::Modulus::powmod: negative exponent");
  ZpPoly result = reduce(ZpPoly{1});
  ZpPoly b = reduce(base);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b);
  }
  return result;
}

}  // namespace lacunary::zp
