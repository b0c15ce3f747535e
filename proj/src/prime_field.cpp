#include "lacunary/prime_field.hpp"

#include "lacunary/errors.hpp"

namespace lacunary {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (std::uint64_t{1} << 62))
    throw InputError("PrimeField: modulus must be an odd prime below 2^62");
}

std::uint64_t PrimeField::reduce(const mpz_class& x) const {
  return mpz_fdiv_ui(x.get_mpz_t(), p_);
}

std::uint64_t PrimeField::reduce_signed(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

std::uint64_t PrimeField::pow(std::uint64_t base, const mpz_class& e) const {
  if (e < 0) throw InputError("PrimeField::pow: negative exponent");
  if (mpz_fits_ulong_p(e.get_mpz_t())) return pow(base, mpz_get_ui(e.get_mpz_t()));
  base %= p_;
  if (base == 0) return 0;
  // Fermat: base^(p-1) = 1
  return pow(base, static_cast<std::uint64_t>(mpz_fdiv_ui(e.get_mpz_t(), p_ - 1)));
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw InputError("PrimeField::inv: zero has no inverse");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p_))
               : static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace lacunary
