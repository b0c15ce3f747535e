#include <gtest/gtest.h>

#include "lacunary/dense_factor.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/pipeline.hpp"
#include "lacunary/poly_parser.hpp"
#include "test_support.hpp"

using namespace lacunary;

namespace {

DensePoly D(const char* s) { return lacunary::testing::expand(parse_poly(s)); }

std::vector<FactorEntry> F(std::initializer_list<std::pair<const char*, unsigned long>> list) {
  std::vector<FactorEntry> out;
  for (const auto& [s, m] : list) out.push_back({D(s), m});
  canonicalize(out);
  return out;
}

PipelineConfig with(Strategy s, GapMode mode = GapMode::standard) {
  PipelineConfig cfg;
  cfg.strategy = s;
  cfg.gap.mode = mode;
  return cfg;
}

}  // namespace

TEST(BoundedDegreeFactors, Examples) {
  auto [r, st] = bounded_degree_factors(parse_poly("6*x^1001 + 6*x^1000 + 6*x^2 + 6*x"), 1);
  EXPECT_EQ(r.sign, 1);
  EXPECT_EQ(r.content, 6);
  EXPECT_EQ(r.x_power, 1);
  EXPECT_EQ(r.factors, F({{"x + 1", 2}}));
  EXPECT_TRUE(verify_report(parse_poly("6*x^1001 + 6*x^1000 + 6*x^2 + 6*x"), r));

  r = bounded_degree_factors(parse_poly("x^2 - 1"), 1).first;
  EXPECT_EQ(r.factors, F({{"x - 1", 1}, {"x + 1", 1}}));

  r = bounded_degree_factors(parse_poly("x^100 - 1"), 2).first;
  EXPECT_EQ(r.factors, F({{"x - 1", 1}, {"x + 1", 1}, {"x^2 + 1", 1}}));

  r = bounded_degree_factors(parse_poly("-1/2*x^7"), 3).first;
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(r.content, Rational(1, 2));
  EXPECT_EQ(r.x_power, 7);
  EXPECT_TRUE(r.factors.empty());

  EXPECT_THROW(bounded_degree_factors(SparsePoly{}, 2), InputError);
  EXPECT_THROW(bounded_degree_factors(parse_poly("x + 1"), 0), InputError);
}

TEST(BoundedDegreeFactors, HugeExponents) {
  // (x^2 + x + 1)(x^(10^30) + 3): the second factor is far beyond dense reach
  SparsePoly f = parse_poly("x^2 + x + 1") * parse_poly("x^1000000000000000000000000000000 + 3");
  for (Strategy s : {Strategy::variant, Strategy::lenstra}) {
    auto r = bounded_degree_factors(f, 4, with(s)).first;
    EXPECT_EQ(r.factors, F({{"x^2 + x + 1", 1}}));
    EXPECT_TRUE(verify_report(f, r));
  }
}

TEST(MergeEq1, Examples) {
  const CycloTable& t = shared_cyclo_table(2);
  EXPECT_EQ(merge_eq1(F({{"x^2 + 2", 1}}), F({{"x + 1", 2}}), t), F({{"x + 1", 2}, {"x^2 + 2", 1}}));
  EXPECT_EQ(merge_eq1(F({{"x + 1", 1}}), F({{"x + 1", 2}}), t), F({{"x + 1", 3}}));
  EXPECT_EQ(merge_eq1({}, {}, t), std::vector<FactorEntry>{});
  EXPECT_THROW(merge_eq1({}, F({{"x^2 + 2", 1}}), t), InternalError);
}

TEST(VerifyReport, Examples) {
  SparsePoly f = parse_poly("6*x^1001 + 6*x^1000 + 6*x^2 + 6*x");
  FactorReport r = bounded_degree_factors(f, 1).first;
  EXPECT_TRUE(verify_report(f, r));

  FactorReport bad = r;
  bad.factors[0].multiplicity = 1;
  EXPECT_FALSE(verify_report(f, bad));
  bad = r;
  bad.factors[0].multiplicity = 3;
  EXPECT_FALSE(verify_report(f, bad));
  bad = r;
  bad.x_power = 2;
  EXPECT_FALSE(verify_report(f, bad));
  bad = r;
  bad.content = 3;
  EXPECT_FALSE(verify_report(f, bad));
  bad = r;
  bad.factors.push_back({D("x - 1"), 1});
  EXPECT_FALSE(verify_report(f, bad));
  bad = r;
  bad.split->G.push_back(parse_poly("x + 5"));
  EXPECT_FALSE(verify_report(f, bad));
}

TEST(BoundedDegreeFactors, FrozenReference) {
  const auto oracle = lacunary::testing::load_oracle();
  const DensePoly x = D("x");
  for (const auto& c : oracle["sparse"]) {
    const std::string text = c["text"].get<std::string>();
    const auto d = c["d"].get<unsigned>();
    SparsePoly f = parse_poly(text);
    std::vector<FactorEntry> expected;
    Integer xpow = 0;
    for (auto& e : lacunary::testing::entries_from_json(c["factors"])) {
      if (e.factor == x)
        xpow = e.multiplicity;
      else
        expected.push_back(e);
    }
    for (Strategy s : {Strategy::variant, Strategy::lenstra}) {
      auto r = bounded_degree_factors(f, d, with(s)).first;
      EXPECT_EQ(r.x_power, xpow) << text;
      EXPECT_EQ(r.factors, expected) << text;
      EXPECT_TRUE(verify_report(f, r)) << text;
    }
  }
}

TEST(BoundedDegreeFactors, StrategiesAgree) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 60; ++i) {
    SparsePoly a = lacunary::testing::random_sparse(rng, 4, 6, 5);
    SparsePoly b = lacunary::testing::random_sparse(rng, 5, 3000, 5);
    SparsePoly f = a * b * (i % 2 ? a : parse_poly("1"));
    const unsigned d = static_cast<unsigned>(rng() % 6 + 1);
    auto v = bounded_degree_factors(f, d, with(Strategy::variant)).first;
    auto l = bounded_degree_factors(f, d, with(Strategy::lenstra)).first;
    auto p = bounded_degree_factors(f, d, with(Strategy::variant, GapMode::paranoid)).first;
    EXPECT_EQ(v, l) << to_string(f) << " d=" << d;
    EXPECT_EQ(v, p) << to_string(f) << " d=" << d;
    EXPECT_TRUE(verify_report(f, v));
  }
}

TEST(BoundedDegreeFactors, ScalingInvariance) {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 20; ++i) {
    SparsePoly f = lacunary::testing::random_sparse(rng, 6, 400, 20) * parse_poly("x^2 - x + 1");
    auto base = bounded_degree_factors(f, 3).first;
    auto scaled = bounded_degree_factors(Rational(-7, 3) * shift_up(f, 11), 3).first;
    EXPECT_EQ(scaled.factors, base.factors);
    EXPECT_EQ(scaled.x_power, base.x_power + 11);
    EXPECT_EQ(scaled.sign, -base.sign);
    EXPECT_EQ(scaled.content, base.content * Rational(7, 3));
  }
}

TEST(BoundedDegreeFactors, PhaseStats) {
  SparsePoly f = parse_poly("x^5000 - 1") * parse_poly("x^3 + 2*x + 7") * parse_poly("x^900 + x + 5");
  for (Strategy s : {Strategy::variant, Strategy::lenstra}) {
    auto [r, st] = bounded_degree_factors(f, 4, with(s));
    EXPECT_GE(st.noncyclotomic_ms, 0);
    EXPECT_GE(st.cyclotomic_ms, 0);
    EXPECT_GE(st.gcd_ms, 0);
    EXPECT_LE(st.noncyclotomic_ms + st.cyclotomic_ms, st.total_ms + 1e-6);
    EXPECT_LE(st.gcd_ms, st.total_ms + 1e-6);
    EXPECT_TRUE(verify_report(f, r));
  }
}

TEST(BoundedDegreeFactors, ResourceLimit) {
  PipelineConfig cfg;
  cfg.gap.mode = GapMode::paranoid;
  cfg.max_span = 100;
  EXPECT_THROW(bounded_degree_factors(parse_poly("x^5000 + x + 1"), 2, cfg), ResourceLimitError);
}
