#include "kronecker.hpp"

#include <algorithm>

namespace lacunary::detail {

namespace {

constexpr std::size_t kWordBits = 64;
static_assert(sizeof(mp_limb_t) == sizeof(std::uint64_t), "64-bit GMP limbs required");

// ORs `nwords` source words into dst starting at bit offset `bitpos`.
void or_bits(std::uint64_t* dst, std::size_t bitpos, const std::uint64_t* src, std::size_t nwords) {
  const std::size_t word = bitpos / kWordBits;
  const unsigned shift = static_cast<unsigned>(bitpos % kWordBits);
  if (shift == 0) {
    for (std::size_t i = 0; i < nwords; ++i) dst[word + i] |= src[i];
    return;
  }
  for (std::size_t i = 0; i < nwords; ++i) {
    dst[word + i] |= src[i] << shift;
    dst[word + i + 1] |= src[i] >> (kWordBits - shift);
  }
}

// Extracts `nbits` bits starting at `bitpos` from a word array of length n.
void get_bits(const std::uint64_t* src, std::size_t n, std::size_t bitpos, std::size_t nbits,
              std::uint64_t* out) {
  const std::size_t out_words = (nbits + kWordBits - 1) / kWordBits;
  const std::size_t word = bitpos / kWordBits;
  const unsigned shift = static_cast<unsigned>(bitpos % kWordBits);
  for (std::size_t i = 0; i < out_words; ++i) {
    std::uint64_t lo = word + i < n ? src[word + i] : 0;
    std::uint64_t hi = word + i + 1 < n ? src[word + i + 1] : 0;
    out[i] = shift == 0 ? lo : (lo >> shift) | (hi << (kWordBits - shift));
  }
  const std::size_t tail = nbits % kWordBits;
  if (tail != 0 && out_words > 0) out[out_words - 1] &= (std::uint64_t{1} << tail) - 1;
}

Integer from_words(std::vector<std::uint64_t>& words) {
  while (!words.empty() && words.back() == 0) words.pop_back();
  Integer z;
  if (words.empty()) return z;
  mp_limb_t* limbs = mpz_limbs_write(z.get_mpz_t(), static_cast<mp_size_t>(words.size()));
  std::copy(words.begin(), words.end(), limbs);
  mpz_limbs_finish(z.get_mpz_t(), static_cast<mp_size_t>(words.size()));
  return z;
}

}  // namespace

std::size_t bit_length(std::uint64_t x) {
  return x == 0 ? 0 : kWordBits - static_cast<std::size_t>(__builtin_clzll(x));
}

std::size_t bit_length(const Integer& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

Integer pack_words(std::span<const std::uint64_t> coeffs, std::size_t slot_bits) {
  std::vector<std::uint64_t> buf((coeffs.size() * slot_bits) / kWordBits + 2, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) or_bits(buf.data(), i * slot_bits, &coeffs[i], 1);
  return from_words(buf);
}

Integer pack_integers(std::span<const Integer> coeffs, std::size_t slot_bits) {
  std::vector<std::uint64_t> buf((coeffs.size() * slot_bits) / kWordBits + 2, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const mpz_srcptr c = coeffs[i].get_mpz_t();
    const std::size_t n = mpz_size(c);
    if (n == 0) continue;
    or_bits(buf.data(), i * slot_bits, reinterpret_cast<const std::uint64_t*>(mpz_limbs_read(c)), n);
  }
  return from_words(buf);
}

std::vector<Integer> unpack_integers(const Integer& packed, std::size_t slot_bits,
                                     std::size_t count) {
  const std::size_t n = mpz_size(packed.get_mpz_t());
  const auto* src = reinterpret_cast<const std::uint64_t*>(mpz_limbs_read(packed.get_mpz_t()));
  std::vector<Integer> out(count);
  std::vector<std::uint64_t> slot((slot_bits + kWordBits - 1) / kWordBits);
  for (std::size_t i = 0; i < count; ++i) {
    if (i * slot_bits >= n * kWordBits) break;
    get_bits(src, n, i * slot_bits, slot_bits, slot.data());
    std::vector<std::uint64_t> tmp(slot);
    out[i] = from_words(tmp);
  }
  return out;
}

std::vector<std::uint64_t> unpack_mod(const Integer& packed, std::size_t slot_bits,
                                      std::size_t count, const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  const std::size_t n = mpz_size(packed.get_mpz_t());
  const auto* src = reinterpret_cast<const std::uint64_t*>(mpz_limbs_read(packed.get_mpz_t()));
  std::vector<std::uint64_t> out(count, 0);
  const std::size_t words = (slot_bits + kWordBits - 1) / kWordBits;
  std::vector<std::uint64_t> slot(words);
  for (std::size_t i = 0; i < count; ++i) {
    if (i * slot_bits >= n * kWordBits) break;
    get_bits(src, n, i * slot_bits, slot_bits, slot.data());
    unsigned __int128 r = 0;
    for (std::size_t w = words; w-- > 0;) r = ((r << 64) | slot[w]) % p;
    out[i] = static_cast<std::uint64_t>(r);
  }
  return out;
}

ZpPoly kronecker_mul(const ZpPoly& a, const ZpPoly& b, const PrimeField& field) {
  if (a.empty() || b.empty()) return {};
  const std::size_t pbits = bit_length(field.modulus() - 1);
  const std::size_t slot = 2 * pbits + bit_length(std::min(a.size(), b.size())) + 1;
  Integer pa = pack_words(a, slot);
  Integer prod;
  if (&a == &b) {
    prod = pa * pa;
  } else {
    Integer pb = pack_words(b, slot);
    prod = pa * pb;
  }
  ZpPoly r = unpack_mod(prod, slot, a.size() + b.size() - 1, field);
  zp::trim(r);
  return r;
}

std::vector<Integer> kronecker_mul_mod(std::span<const Integer> a, std::span<const Integer> b,
                                       const Integer& m) {
  if (a.empty() || b.empty()) return {};
  Integer m1 = m - 1;
  const std::size_t slot = 2 * bit_length(m1) + bit_length(static_cast<std::uint64_t>(std::min(a.size(), b.size()))) + 1;
  Integer pa = pack_integers(a, slot);
  Integer prod;
  if (a.data() == b.data() && a.size() == b.size()) {
    prod = pa * pa;
  } else {
    Integer pb = pack_integers(b, slot);
    prod = pa * pb;
  }
  std::vector<Integer> r = unpack_integers(prod, slot, a.size() + b.size() - 1);
  for (auto& c : r) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace lacunary::detail
