#include <gtest/gtest.h>

#include "lacunary/errors.hpp"
#include "lacunary/gcd.hpp"
#include "lacunary/poly_parser.hpp"
#include "lacunary/sparse_poly.hpp"
#include "test_support.hpp"

using namespace lacunary;
using lacunary::testing::expand;

namespace {

SparsePoly P(const char* s) { return parse_poly(s); }

Term T(long e, long c) { return Term{Integer(e), Rational(c)}; }

}  // namespace

TEST(Normalize, MergesDropsAndRejects) {
  EXPECT_EQ(SparsePoly::normalize({T(3, 1), T(3, 1)}), SparsePoly::monomial(2, 3));
  EXPECT_EQ(SparsePoly::normalize({T(0, 1), T(5, 0)}), SparsePoly::monomial(1, 0));
  EXPECT_EQ(SparsePoly::normalize({T(2, 1), T(1, -1), T(2, -1)}), SparsePoly::monomial(-1, 1));
  EXPECT_THROW(SparsePoly::normalize({T(-1, 1)}), InputError);
}

TEST(Bounds, DegreeAndValuation) {
  auto b = bounds(P("1 + x^999"));
  EXPECT_EQ(b.degree, 999);
  EXPECT_EQ(b.valuation, 0);
  b = bounds(P("x^5"));
  EXPECT_EQ(b.degree, 5);
  EXPECT_EQ(b.valuation, 5);
  b = bounds(P("3*x^7 - x"));
  EXPECT_EQ(b.degree, 7);
  EXPECT_EQ(b.valuation, 1);
  EXPECT_THROW(bounds(SparsePoly{}), InputError);
}

TEST(ContentPrimitive, Examples) {
  auto s = content_primitive(P("6*x^3 - 6*x"));
  EXPECT_EQ(s.sign, 1);
  EXPECT_EQ(s.content, 6);
  EXPECT_EQ(s.shift, 1);
  EXPECT_EQ(s.primitive, P("x^2 - 1"));

  s = content_primitive(P("-4*x^5 + 2*x^2"));
  EXPECT_EQ(s.sign, -1);
  EXPECT_EQ(s.content, 2);
  EXPECT_EQ(s.shift, 2);
  EXPECT_EQ(s.primitive, P("2*x^3 - 1"));

  s = content_primitive(P("-1/3*x + 2"));
  EXPECT_EQ(s.sign, -1);
  EXPECT_EQ(s.content, Rational(1, 3));
  EXPECT_EQ(s.shift, 0);
  EXPECT_EQ(s.primitive, P("x - 6"));
}

TEST(ContentPrimitive, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    SparsePoly f = lacunary::testing::random_sparse(rng, 8, 300, 50);
    f = Rational(rng() % 7 + 1, rng() % 5 + 1) * f;
    auto s = content_primitive(f);
    SparsePoly back = Rational(s.sign) * s.content * shift_up(s.primitive, s.shift);
    EXPECT_EQ(back, f);
    EXPECT_GT(s.primitive.terms().back().coeff, 0);
    EXPECT_EQ(s.primitive.valuation(), 0);
  }
}

TEST(SparseDerivative, Examples) {
  EXPECT_EQ(sparse_derivative(P("3*x^7 + 2*x^4")), P("9*x^2"));
  EXPECT_TRUE(sparse_derivative(P("x^5")).is_zero());
  EXPECT_EQ(sparse_derivative(P("1 + x + x^999")), P("1 + 999*x^998"));
}

TEST(SparseDerivative, DegreeAndTermCount) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    SparsePoly f = lacunary::testing::random_sparse(rng, 10, 500, 20);
    if (f.size() < 2) continue;
    SparsePoly d = sparse_derivative(f);
    EXPECT_EQ(d.degree(), f.degree() - f.valuation() - 1);
    EXPECT_TRUE(d.size() == f.size() || d.size() + 1 == f.size());
  }
}

TEST(ReduceExponents, Examples) {
  EXPECT_EQ(reduce_exponents_mod(P("x^10 + x^3 + 2"), 4), (DensePoly{2, 0, 1, 1}));
  EXPECT_EQ(reduce_exponents_mod(P("x^5 + x"), 4), (DensePoly{0, 2}));
  EXPECT_EQ(reduce_exponents_mod(P("x^1000 + 2*x^500 + 1"), 8), (DensePoly{2, 0, 0, 0, 2}));
  EXPECT_THROW(reduce_exponents_mod(P("x"), 0), InputError);
}

TEST(ReduceExponents, GcdWithBinomialIsPreserved) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    SparsePoly f = lacunary::testing::random_sparse(rng, 6, 2000, 5);
    if (f.valuation() != 0 || f.size() < 2) continue;
    const std::uint64_t r = rng() % 60 + 1;
    DensePoly xr = DensePoly::x_pow_minus_one(r);
    EXPECT_EQ(gcd_dense(expand(f), xr), gcd_dense(reduce_exponents_mod(f, r), xr)) << r;
  }
}

TEST(SparseMod, Examples) {
  const DensePoly m{1, 0, 1};
  EXPECT_EQ(sparse_mod(P("x^1000 + 1"), m), (DensePoly{2}));
  EXPECT_EQ(sparse_mod(P("x^999 + 1"), m), (DensePoly{1, -1}));
  EXPECT_TRUE(sparse_mod(P("x^2 + 1"), m).is_zero());
  EXPECT_THROW(sparse_mod(P("x"), DensePoly{3}), InputError);
}

TEST(SparseMod, AgreesWithDenseRemainder) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 80; ++i) {
    SparsePoly f = lacunary::testing::random_sparse(rng, 8, 2000, 30);
    DensePoly m = lacunary::testing::random_dense(rng, static_cast<long>(rng() % 5 + 1), 9);
    std::vector<Integer> c(m.coeffs().begin(), m.coeffs().end() - 1);
    c.push_back(1);  // monic
    m = DensePoly(std::move(c));
    EXPECT_EQ(sparse_mod(f, m), divrem_monic(expand(f), m).second);
  }
}

TEST(SparseModP, AgreesWithExactRemainder) {
  std::mt19937_64 rng(15);
  PrimeField field(1000000007);
  for (int i = 0; i < 50; ++i) {
    SparsePoly f = lacunary::testing::random_sparse(rng, 8, 1500, 30);
    DensePoly m = lacunary::testing::random_dense(rng, 4, 9);
    std::vector<Integer> c(m.coeffs().begin(), m.coeffs().end() - 1);
    c.push_back(1);
    m = DensePoly(std::move(c));
    EXPECT_EQ(sparse_mod_p(f, m, field), zp::reduce(sparse_mod(f, m), field));
  }
}

TEST(EvalMod, Examples) {
  EXPECT_EQ(eval_mod(P("x^10 + 1"), 2, PrimeField(101)), 15u);
  EXPECT_EQ(eval_mod(P("7 + 3*x^5 + x^99"), 0, PrimeField(101)), 7u);
  EXPECT_EQ(eval_mod(P("x^999"), 1, PrimeField(7)), 1u);
}

TEST(EvalMod, AgreesWithDenseEvaluation) {
  std::mt19937_64 rng(16);
  PrimeField field(998244353);
  for (int i = 0; i < 100; ++i) {
    SparsePoly f = lacunary::testing::random_sparse(rng, 8, 400, 100);
    const std::uint64_t a = rng() % 998244353;
    Integer v = evaluate(expand(f), Integer(static_cast<unsigned long>(a)));
    EXPECT_EQ(eval_mod(f, a, field), field.reduce(v));
  }
}

TEST(SparseSize, Examples) {
  EXPECT_EQ(sparse_size(SparsePoly{}), 0u);
  EXPECT_EQ(sparse_size(P("3")), 3u);
  EXPECT_EQ(sparse_size(P("x^1024")), 13u);
}

TEST(ToDenseCore, Examples) {
  auto c = to_dense_core(P("x^1000000 + x^1000001"), kDefaultMaxSpan);
  EXPECT_EQ(c.shift, 1000000);
  EXPECT_EQ(c.core, (DensePoly{1, 1}));
  c = to_dense_core(P("1 + x^999"), std::size_t{1} << 20);
  EXPECT_EQ(c.shift, 0);
  EXPECT_EQ(c.core.degree(), 999);
  EXPECT_THROW(to_dense_core(P("1 + x^1073741824"), std::size_t{1} << 20), ResourceLimitError);
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(P("x + 1") + P("x - 1"), P("2*x"));
  EXPECT_EQ(P("x + 1") * P("x - 1"), P("x^2 - 1"));
  EXPECT_EQ(P("1 + x") * P("1 + x^999"), P("1 + x + x^999 + x^1000"));
}

TEST(Arithmetic, ProductMatchesDense) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    SparsePoly a = lacunary::testing::random_sparse(rng, 6, 100, 20);
    SparsePoly b = lacunary::testing::random_sparse(rng, 6, 100, 20);
    EXPECT_EQ(expand(a * b), expand(a) * expand(b));
  }
}
