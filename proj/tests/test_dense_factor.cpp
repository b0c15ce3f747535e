#include <gtest/gtest.h>

#include "lacunary/cyclotomic.hpp"
#include "lacunary/dense_factor.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/poly_parser.hpp"
#include "test_support.hpp"

using namespace lacunary;
using lacunary::testing::product;
using lacunary::testing::random_dense;

namespace {

DensePoly D(const char* s) { return lacunary::testing::expand(parse_poly(s)); }

std::vector<FactorEntry> F(std::initializer_list<std::pair<const char*, unsigned long>> list) {
  std::vector<FactorEntry> out;
  for (const auto& [s, m] : list) out.push_back({D(s), m});
  canonicalize(out);
  return out;
}

void expect_reexpands(const DensePoly& g, const Factorization& f) {
  EXPECT_EQ(f.unit * product(f.factors), g);
}

// For degree <= 3 irreducibility over Q is the absence of rational roots.
bool has_rational_root(const DensePoly& f) {
  Integer a0 = abs(f[0]), an = abs(f.leading());
  if (a0 == 0) return true;
  for (Integer p = 1; p <= a0; ++p) {
    if (a0 % p != 0) continue;
    for (Integer q = 1; q <= an; ++q) {
      if (an % q != 0) continue;
      for (int s : {1, -1}) {
        // q^n f(s p / q) = sum c_i (s p)^i q^(n-i)
        Integer v = 0;
        for (long i = 0; i <= f.degree(); ++i) {
          Integer t = f[static_cast<std::size_t>(i)];
          for (long k = 0; k < i; ++k) t *= s * p;
          for (long k = i; k < f.degree(); ++k) t *= q;
          v += t;
        }
        if (v == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST(Mignotte, Examples) {
  EXPECT_EQ(mignotte_bound(D("x^2 + 1"), 1), 3);
  EXPECT_EQ(mignotte_bound(D("x"), 0), 1);
  EXPECT_EQ(mignotte_bound(D("x^2 - 1"), 1), 3);
  EXPECT_THROW(mignotte_bound(DensePoly{}, 1), InputError);
}

TEST(Mignotte, BoundsTrueFactors) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 30; ++i) {
    DensePoly a = random_dense(rng, static_cast<long>(rng() % 5 + 1), 30);
    DensePoly b = random_dense(rng, static_cast<long>(rng() % 5 + 1), 30);
    DensePoly f = a * b;
    const Integer B = mignotte_bound(f, a.degree());
    for (const auto& c : a.coeffs()) EXPECT_LE(abs(c) * abs(f.leading()) / abs(a.leading()), B);
  }
}

TEST(Squarefree, Examples) {
  EXPECT_EQ(squarefree_decomposition(D("x^3 + 2*x^2 + x")), F({{"x", 1}, {"x + 1", 2}}));
  EXPECT_EQ(squarefree_decomposition(D("x^2 + 1")), F({{"x^2 + 1", 1}}));
  EXPECT_EQ(squarefree_decomposition(pow(D("x - 1"), 3)), F({{"x - 1", 3}}));
}

TEST(Squarefree, Property) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 40; ++i) {
    DensePoly a = primitive_part(random_dense(rng, static_cast<long>(rng() % 4 + 1), 9));
    DensePoly b = primitive_part(random_dense(rng, static_cast<long>(rng() % 3 + 1), 9));
    DensePoly f = primitive_part(a * pow(b, 2) * pow(DensePoly{1, 1}, 3));
    auto parts = squarefree_decomposition(f);
    DensePoly back = product(parts);
    EXPECT_EQ(back, f);
    for (const auto& e : parts) EXPECT_EQ(content(e.factor), 1);
  }
}

TEST(ChoosePrime, Examples) {
  EXPECT_EQ(choose_prime(D("x^2 + 1")), 3u);
  EXPECT_EQ(choose_prime(D("x^2 - 1")), 3u);
  EXPECT_EQ(choose_prime(D("3*x^2 + 1")), 5u);
  EXPECT_EQ(choose_prime(D("x^2 + 1"), 3), 5u);
}

TEST(FactorModP, Examples) {
  EXPECT_EQ(factor_mod_p(D("x^2 + 1"), 5), (std::vector<ZpPoly>{{2, 1}, {3, 1}}));
  EXPECT_EQ(factor_mod_p(D("x^2 + 1"), 3), (std::vector<ZpPoly>{{1, 0, 1}}));
  EXPECT_EQ(factor_mod_p(D("x"), 7), (std::vector<ZpPoly>{{0, 1}}));
}

TEST(FactorModP, ProductAndIrreducibility) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 30; ++i) {
    DensePoly f = random_dense(rng, static_cast<long>(rng() % 30 + 2), 100);
    f = primitive_part(f);
    if (f[0] == 0) continue;
    auto sqf = squarefree_decomposition(f);
    if (sqf.size() != 1 || sqf[0].multiplicity != 1) continue;
    const std::uint64_t p = choose_prime(f);
    PrimeField field(p);
    auto factors = factor_mod_p(f, p);
    ZpPoly prod{1};
    for (const auto& g : factors) {
      prod = zp::mul(prod, g, field);
      EXPECT_EQ(g.back(), 1u);
      // no factor of degree k shares a root with x^(p^j) - x for j < k
      ZpPoly h{0, 1};
      zp::Modulus mod(g, field);
      for (long j = 1; j < zp::degree(g); ++j) {
        h = mod.powmod(h, Integer(static_cast<unsigned long>(p)));
        EXPECT_EQ(zp::degree(zp::gcd(g, zp::sub(h, ZpPoly{0, 1}, field), field)), 0);
      }
    }
    EXPECT_EQ(prod, zp::monic(zp::reduce(f, field), field));
  }
}

TEST(HenselLift, Examples) {
  LiftedFactors l = hensel_lift(D("x^2 - 1"), {{4, 1}, {1, 1}}, 5, Integer(12));
  EXPECT_EQ(l.modulus, 25);
  EXPECT_EQ(l.factors, (std::vector<DensePoly>{DensePoly{24, 1}, DensePoly{1, 1}}));

  l = hensel_lift(D("x^2 + 1"), {{1, 0, 1}}, 3, Integer(1));
  EXPECT_EQ(l.modulus, 3);
  EXPECT_EQ(l.factors, (std::vector<DensePoly>{D("x^2 + 1")}));

  EXPECT_THROW(hensel_lift(D("x^2 - 1"), {{4, 1}, {4, 1}}, 5, Integer(12)), InputError);
}

TEST(HenselLift, ProductCongruence) {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 25; ++i) {
    DensePoly f = primitive_part(random_dense(rng, static_cast<long>(rng() % 40 + 2), 1000));
    auto sqf = squarefree_decomposition(f);
    if (sqf.size() != 1 || sqf[0].multiplicity != 1 || f[0] == 0) continue;
    const std::uint64_t p = choose_prime(f);
    auto seeds = factor_mod_p(f, p);
    LiftedFactors l = hensel_lift(f, seeds, p, mignotte_bound(f, f.degree()));
    EXPECT_GT(l.modulus, 2 * mignotte_bound(f, f.degree()));
    DensePoly prod = DensePoly::constant(f.leading());
    for (const auto& g : l.factors) prod = prod * g;
    for (long k = 0; k <= f.degree(); ++k) {
      Integer diff = prod.coeff(static_cast<std::size_t>(k)) - f.coeff(static_cast<std::size_t>(k));
      EXPECT_TRUE(mpz_divisible_p(diff.get_mpz_t(), l.modulus.get_mpz_t()));
    }
    PrimeField field(p);
    for (std::size_t j = 0; j < seeds.size(); ++j) EXPECT_EQ(zp::reduce(l.factors[j], field), seeds[j]);
  }
}

TEST(Recombine, Examples) {
  auto run = [](const DensePoly& f) {
    const std::uint64_t p = choose_prime(f);
    auto lifted = hensel_lift(f, factor_mod_p(f, p), p, mignotte_bound(f, f.degree()));
    auto out = recombine(f, lifted);
    std::vector<FactorEntry> e;
    for (auto& g : out) e.push_back({g, 1});
    canonicalize(e);
    return e;
  };
  EXPECT_EQ(run(D("x^4 + 4")), F({{"x^2 - 2*x + 2", 1}, {"x^2 + 2*x + 2", 1}}));
  EXPECT_EQ(run(D("x^2 + 1")), F({{"x^2 + 1", 1}}));
  EXPECT_EQ(run(D("x^2 - 1")), F({{"x - 1", 1}, {"x + 1", 1}}));
}

TEST(Recombine, SubsetCap) {
  // x^16 + 1 splits into 8 quadratics mod 17^... choose a prime with many factors
  DensePoly f = D("x^16 + 1");
  std::uint64_t p = 17;
  while (factor_mod_p(f, p).size() < 8) p = choose_prime(f, p);
  auto lifted = hensel_lift(f, factor_mod_p(f, p), p, mignotte_bound(f, 16));
  RecombineOptions o;
  o.subset_cap = 3;
  EXPECT_THROW(recombine(f, lifted, o), ResourceLimitError);
}

TEST(FactorOverQ, Examples) {
  auto r = factor_over_Q(D("x^6 - 1"));
  EXPECT_EQ(r.unit, 1);
  EXPECT_EQ(r.factors, F({{"x - 1", 1}, {"x + 1", 1}, {"x^2 + x + 1", 1}, {"x^2 - x + 1", 1}}));
  r = factor_over_Q(D("2*x^2 + 2"));
  EXPECT_EQ(r.unit, 2);
  EXPECT_EQ(r.factors, F({{"x^2 + 1", 1}}));
  r = factor_over_Q(D("x^5 - x^4 - x + 1"));
  EXPECT_EQ(r.factors, F({{"x - 1", 2}, {"x + 1", 1}, {"x^2 + 1", 1}}));
  r = factor_over_Q(D("-3*x^3"));
  EXPECT_EQ(r.unit, -3);
  EXPECT_EQ(r.factors, F({{"x", 3}}));
  EXPECT_THROW(factor_over_Q(DensePoly{}), InputError);
}

TEST(FactorOverQ, DegreeFilter) {
  DensePoly g = D("x^5 - x^4 - x + 1") * D("x^4 + 4") * pow(D("x^3 - 2"), 2);
  auto r = factor_over_Q(g, 1u);
  EXPECT_EQ(r.factors, F({{"x - 1", 2}, {"x + 1", 1}}));
  r = factor_over_Q(g, 2u);
  EXPECT_EQ(r.factors, F({{"x - 1", 2}, {"x + 1", 1}, {"x^2 + 1", 1}, {"x^2 - 2*x + 2", 1}, {"x^2 + 2*x + 2", 1}}));
  r = factor_over_Q(g, 3u);
  EXPECT_EQ(r.factors, F({{"x - 1", 2}, {"x + 1", 1}, {"x^2 + 1", 1}, {"x^2 - 2*x + 2", 1}, {"x^2 + 2*x + 2", 1}, {"x^3 - 2", 2}}));
}

TEST(FactorOverQ, FrozenReference) {
  const auto oracle = lacunary::testing::load_oracle();
  for (const auto& c : oracle["dense"]) {
    const std::string text = c["text"].get<std::string>();
    DensePoly g = lacunary::testing::expand(parse_poly(text));
    auto r = factor_over_Q(g);
    EXPECT_EQ(r.factors, lacunary::testing::entries_from_json(c["factors"])) << text;
    expect_reexpands(g, r);
  }
}

TEST(FactorOverQ, ReexpansionAndIrreducibility) {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 60; ++i) {
    DensePoly g = Integer(static_cast<long>(rng() % 5) - 2 == 0 ? 3 : static_cast<long>(rng() % 5) - 2) *
                  random_dense(rng, static_cast<long>(rng() % 3 + 1), 6) *
                  pow(random_dense(rng, static_cast<long>(rng() % 3 + 1), 6), static_cast<unsigned>(rng() % 2 + 1)) *
                  random_dense(rng, static_cast<long>(rng() % 4), 6);
    if (g.is_zero()) continue;
    auto r = factor_over_Q(g);
    expect_reexpands(g, r);
    for (const auto& e : r.factors) {
      EXPECT_EQ(primitive_part(e.factor), e.factor);
      if (e.factor.degree() >= 2 && e.factor.degree() <= 3) EXPECT_FALSE(has_rational_root(e.factor)) << to_string(e.factor);
    }
    for (std::size_t k = 1; k < r.factors.size(); ++k)
      EXPECT_TRUE(canonical_less(r.factors[k - 1].factor, r.factors[k].factor));
  }
}

TEST(FactorOverQ, HighDegreeCyclotomicPart) {
  // x^5040 - 1 splits into many small pieces modulo every prime
  auto r = factor_over_Q(DensePoly::x_pow_minus_one(5040), 16u);
  std::vector<FactorEntry> expected;
  for (std::uint64_t q = 1; q <= 5040; ++q)
    if (5040 % q == 0 && euler_phi(q) <= 16) expected.push_back({cyclotomic_poly_direct(q), 1});
  canonicalize(expected);
  EXPECT_EQ(r.factors, expected);
}
