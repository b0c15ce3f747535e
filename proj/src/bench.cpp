#include "lacunary/bench.hpp"

#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

// Uniform in [0, n) by rejection, independent of the standard library's
// distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

Integer draw_integer(std::mt19937_64& rng, const Integer& lo, const Integer& hi) {
  Integer width = hi - lo + 1;
  if (!mpz_fits_ulong_p(width.get_mpz_t())) throw InputError("bench: range too wide");
  return lo + Integer(static_cast<unsigned long>(draw(rng, width.get_ui())));
}

long nonzero_coeff(std::mt19937_64& rng) {
  const long v = static_cast<long>(draw(rng, 20));  // 0..19 -> -10..-1, 1..10
  return v < 10 ? v - 10 : v - 9;
}

DensePoly random_dense(std::mt19937_64& rng, unsigned degree) {
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = nonzero_coeff(rng);
  return DensePoly(std::move(c));
}

Integer scaled(const Rational& scale, unsigned long base) {
  Rational v = scale * Rational(base);
  Integer r = v.get_num() / v.get_den();
  if (2 * (v.get_num() - r * v.get_den()) >= v.get_den()) ++r;
  return r < 1 ? Integer(1) : r;
}

}  // namespace

BenchShape bench_shape(const Rational& scale) {
  if (scale <= 0 || scale > 1) throw InputError("bench: scale must lie in (0, 1]");
  BenchShape shape;
  shape.binomial_order = scaled(scale, 100000);
  shape.sparse_spread = scaled(scale, 1000000);
  return shape;
}

BenchInstance bench_instance(const Rational& scale, std::uint64_t seed) {
  const BenchShape shape = bench_shape(scale);
  std::mt19937_64 rng(seed);
  BenchInstance out;
  for (unsigned i = 0; i < shape.dense_factors; ++i)
    out.factors.push_back(SparsePoly::from_dense(random_dense(rng, shape.dense_degree)));
  const Integer r_lo = std::max(Integer(1), Integer(shape.binomial_order / 2));
  const Integer r_hi = Integer(shape.binomial_order * 3 / 2);
  for (unsigned i = 0; i < shape.binomials; ++i) {
    Integer r = draw_integer(rng, r_lo, std::max(r_lo, r_hi));
    out.factors.push_back(SparsePoly::normalize({Term{0, Rational(-1)}, Term{r, Rational(1)}}));
  }
  SparsePoly sparse;
  for (unsigned i = 0; i < shape.sparse_monomials; ++i) {
    Integer e = draw_integer(rng, 0, shape.sparse_spread);
    sparse = sparse + SparsePoly::from_dense(random_dense(rng, shape.sparse_degree), e);
  }
  out.factors.push_back(std::move(sparse));

  out.product = SparsePoly::normalize({Term{0, Rational(1)}});
  for (const auto& f : out.factors) out.product = out.product * f;
  return out;
}

SparsePoly bench_generate(const Rational& scale, std::uint64_t seed) {
  return bench_instance(scale, seed).product;
}

std::size_t nominal_term_count(const std::vector<SparsePoly>& factors) {
  std::set<Integer> support{Integer(0)};
  for (const auto& f : factors) {
    std::set<Integer> next;
    for (const auto& a : support)
      for (const auto& t : f.terms()) next.insert(a + t.exponent);
    support = std::move(next);
  }
  return support.size();
}

}  // namespace lacunary
