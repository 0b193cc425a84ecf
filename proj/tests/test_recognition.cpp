#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace hypersing;
using hs_test::Gen;

namespace {

Poly Z(const char* text) { return parse_poly(text, z_variables()); }

const std::vector<std::string> kChartVars{"x1", "x2", "x3", "x4"};

Poly family_b_chart_moved(const Rat& a, const Rat& b) {
  Poly chart = parse_poly("x2^2 - x1*x3 + x1*x4^2", kChartVars);
  chart += a * parse_poly("x1^3", kChartVars);
  chart += b * parse_poly("x3^3", kChartVars);
  return substitute(chart, {{"x3", parse_poly("x3 + x4^2", kChartVars)}});
}

const Weights kFamilyBWeights{{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 6)}, Rat(1)};

}  // namespace

TEST(SqhSplit, NormalFormPlusHigherTerm) {
  const auto s = sqh_split(Z("z1^6 + z2^2 + z3^2 + z4^2 + z1^7"), hs_test::ak_weights(5));
  EXPECT_EQ(s.f0, hs_test::ak_normal_form(5));
  EXPECT_EQ(s.g, Z("z1^7"));
}

TEST(SqhSplit, FamilyBChart) {
  const Poly f = family_b_chart_moved(1, 1);
  const auto s = sqh_split(f, kFamilyBWeights);
  EXPECT_EQ(s.f0 + s.g, f);
  EXPECT_EQ(s.f0, parse_poly("x2^2 - x1*x3 + x4^6", kChartVars));
}

TEST(SqhSplit, Errors) {
  EXPECT_THROW(sqh_split(Z("z1"), hs_test::ak_weights(5)), NotSemiquasihomogeneous);
  EXPECT_THROW(sqh_split(Z("z1^7 + z2^3"), hs_test::ak_weights(5)), NotSemiquasihomogeneous);
  EXPECT_THROW(sqh_split(Z("1 + z1^6"), hs_test::ak_weights(5)), PreconditionError);
  EXPECT_THROW(sqh_split(parse_poly("x1^2", {{"x1", "x2"}}), hs_test::ak_weights(5)), PreconditionError);
}

TEST(SqhSplitProperty, PartitionsByWeightedDegree) {
  Gen gen(41);
  for (std::int64_t k = 1; k <= 7; ++k) {
    const Weights w = hs_test::ak_weights(k);
    const Poly f = hs_test::ak_normal_form(k) + hs_test::random_higher_terms(gen, z_variables(), w, 5, static_cast<unsigned>(k + 3));
    const auto s = sqh_split(f, w);
    EXPECT_EQ(s.f0 + s.g, f);
    for (const auto& [e, c] : s.f0.terms()) EXPECT_EQ(weighted_degree(e, w), 1);
    for (const auto& [e, c] : s.g.terms()) EXPECT_GT(weighted_degree(e, w), 1);
  }
}

TEST(ReduceDegreeOne, NormalFormUnchanged) {
  const auto s = sqh_split(hs_test::ak_normal_form(3), hs_test::ak_weights(3));
  const auto r = reduce_degree_one_part(s);
  EXPECT_EQ(r.residual, 1);
  EXPECT_TRUE(r.changes.empty());
  EXPECT_EQ(r.split.f0, s.f0);
}

TEST(ReduceDegreeOne, CompletingTheSquare) {
  const auto s = sqh_split(Z("z1^4 + z1^2*z2 + z2^2 + z3^2 + z4^2"), hs_test::ak_weights(3));
  const auto r = reduce_degree_one_part(s);
  EXPECT_EQ(r.residual, Rat(3, 4));
  ASSERT_EQ(r.changes.size(), 1u);
  EXPECT_EQ(r.changes[0].images.at("z2"), Z("z2 - 1/2*z1^2"));
  // Oracle: direct expansion of the recorded substitution.
  EXPECT_EQ(substitute(s.f0, r.changes[0].images), Z("3/4*z1^4 + z2^2 + z3^2 + z4^2"));
}

TEST(ReduceDegreeOne, PerfectSquareIsDegenerate) {
  const auto s = sqh_split(Z("(z1^2 + z2)^2 + z3^2 + z4^2"), hs_test::ak_weights(3));
  EXPECT_THROW(reduce_degree_one_part(s), DegenerateError);
}

TEST(ReduceDegreeOne, RankDeficientQuadraticPart) {
  const auto s = sqh_split(Z("z1^4 + (z2 + z3)^2 + z4^2"), hs_test::ak_weights(3));
  EXPECT_THROW(reduce_degree_one_part(s), DegenerateError);
}

TEST(ReduceDegreeOne, OffDiagonalOnlyQuadraticPart) {
  // Only cross terms z2*z3, z3*z4, z2*z4 and z1^m-linear terms.
  const auto s = sqh_split(Z("z1^6 + z2*z3 + z3*z4 + z2*z4 + 2*z1^3*z2 - z1^3*z4"), hs_test::ak_weights(5));
  const auto r = reduce_degree_one_part(s);
  EXPECT_NE(r.residual, 0);
  EXPECT_EQ(r.split.f0 + r.split.g, apply_changes(s.f0 + s.g, r.changes));
}

TEST(ReduceDegreeOneProperty, IdempotentAndReplayable) {
  Gen gen(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t k = 2 * gen.integer(1, 4) - 1;  // A_odd, where z1^m-linear terms exist
    const Weights w = hs_test::ak_weights(k);
    const auto z = z_variables();
    Poly f0 = gen.nonzero_rational() * Poly::variable(z, 0).pow(static_cast<unsigned>(k + 1));
    for (std::size_t i = 1; i < 4; ++i) {
      f0 += gen.nonzero_rational() * Poly::variable(z, i).pow(2);
      f0 += gen.rational() * Poly::variable(z, 0).pow(static_cast<unsigned>((k + 1) / 2)) * Poly::variable(z, i);
      for (std::size_t j = i + 1; j < 4; ++j) f0 += gen.rational() * Poly::variable(z, i) * Poly::variable(z, j);
    }
    const Poly f = f0 + hs_test::random_higher_terms(gen, z, w, 3, static_cast<unsigned>(k + 3));
    DegreeOneReduction r;
    try {
      r = reduce_degree_one_part(sqh_split(f, w));
    } catch (const DegenerateError&) {
      continue;  // random coefficients may hit a degenerate form
    }
    const auto replay = sqh_split(apply_changes(f, r.changes), w);
    EXPECT_EQ(replay.f0, r.split.f0);
    EXPECT_EQ(replay.g, r.split.g);
    const auto again = reduce_degree_one_part(r.split);
    EXPECT_TRUE(again.changes.empty());
    EXPECT_EQ(again.residual, r.residual);
    EXPECT_EQ(again.split.f0, r.split.f0);
  }
}

TEST(Recognize, NormalForms) {
  const auto c = recognize_with_weights(hs_test::ak_normal_form(5), hs_test::ak_weights(5));
  EXPECT_TRUE(c.is_Ak(5));
  EXPECT_EQ(*c.milnor_number, 5u);
  EXPECT_EQ(c.link->tag, LinkTag::S2xS3);
  const Poly g = Z("z4^6 + z1^2 + z2^2 + z3^2");
  const Weights w{{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 6)}, Rat(1)};
  EXPECT_TRUE(recognize_with_weights(g, w).is_Ak(5));
  EXPECT_TRUE(recognize_with_weights(g, hs_test::ak_weights(5), std::vector<std::size_t>{3, 0, 1, 2}).is_Ak(5));
  EXPECT_NE(recognize_with_weights(g, hs_test::ak_weights(5)).tag, SingularityTag::Ak);
  EXPECT_TRUE(recognize(g).is_Ak(5));
}

TEST(Recognize, FamilyBChart) {
  for (const auto& [a, b] : std::vector<std::pair<Rat, Rat>>{{1, 1}, {Rat(-2, 3), Rat(7, 5)}}) {
    const auto c = recognize_with_weights(family_b_chart_moved(a, b), kFamilyBWeights);
    EXPECT_TRUE(c.is_Ak(5)) << c.reason;
  }
}

TEST(Recognize, AllHalfWeightsSearchesEveryPosition) {
  const Weights half{{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}, Rat(1)};
  EXPECT_TRUE(recognize_with_weights(Z("z1*z2 + z3^2 + z4^2"), half).is_Ak(1));
  EXPECT_EQ(recognize_with_weights(Z("z1*z2 + z3^2"), half).tag, SingularityTag::Degenerate);
}

TEST(Recognize, Failures) {
  EXPECT_EQ(recognize_with_weights(Z("z1^3 + z2^2 + z3^2 + z4^2"), hs_test::ak_weights(5)).tag, SingularityTag::NotAk);
  const Weights odd{{Rat(1, 3), Rat(1, 3), Rat(1, 2), Rat(1, 2)}, Rat(1)};
  EXPECT_EQ(recognize_with_weights(Z("z1^3 + z2^3 + z3^2 + z4^2"), odd).tag, SingularityTag::NotAk);
  EXPECT_EQ(recognize_with_weights(Z("(z1^2 + z2)^2 + z3^2 + z4^2"), hs_test::ak_weights(3)).tag,
            SingularityTag::Degenerate);
  EXPECT_THROW(recognize_with_weights(hs_test::ak_normal_form(3), hs_test::ak_weights(3), std::vector<std::size_t>{0, 0, 1, 2}),
               PreconditionError);
}

TEST(Recognize, CertificateReplay) {
  const Poly f = Z("z1^4 + z1^2*z2 + z2*z3 + z3^2 + z4^2 + z1^5 + z2^3");
  const auto c = recognize_with_weights(f, hs_test::ak_weights(3));
  ASSERT_TRUE(c.is_Ak(3));
  const auto s = sqh_split(apply_changes(f, c.certificate), hs_test::ak_weights(3));
  // Replayed degree-1 part is diagonal: residual*z1^4 + sum D_i z_i^2.
  for (const auto& [e, coeff] : s.f0.terms()) {
    const bool pure = std::count_if(e.begin(), e.end(), [](unsigned x) { return x > 0; }) == 1;
    EXPECT_TRUE(pure);
  }
  EXPECT_EQ(s.f0.size(), 4u);
}

TEST(MuCorank, Examples) {
  const auto a = classify_mu_corank(parse_poly("x4^2 + x1*x2 + x1^2*x3 + x1*x3^2 + x2^3", kChartVars));
  EXPECT_TRUE(a.is_Ak(5));
  EXPECT_TRUE(classify_mu_corank(Z("z1^2 + z2^2 + z3^2 + z4^2")).is_Ak(1));
  EXPECT_EQ(classify_mu_corank(Z("z1^3 + z2^3 + z3^2 + z4^2")).tag, SingularityTag::NotAk);
  EXPECT_THROW(classify_mu_corank(Z("z2^2 + z3^2 + z4^2"), local_milnor_certificate(Z("z2^2 + z3^2 + z4^2"), 6)),
               PreconditionError);
}

TEST(RecognitionProperty, InvariantUnderPermutationRescalingAndHigherTerms) {
  Gen gen(43);
  const std::vector<std::vector<std::size_t>> perms{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 2, 1}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 1, 3, 2}};
  for (std::int64_t k = 1; k <= 6; ++k) {
    const Weights w = hs_test::ak_weights(k);
    for (const auto& perm : perms) {
      Poly f = hs_test::permute_variables(hs_test::ak_normal_form(k), perm);
      f = hs_test::rescale_variables(f, {gen.nonzero_rational(), gen.nonzero_rational(), gen.nonzero_rational(), gen.nonzero_rational()});
      f += hs_test::random_higher_terms(gen, z_variables(), w, 5, static_cast<unsigned>(k + 3));
      const auto c = recognize_with_weights(f, w);
      EXPECT_TRUE(c.is_Ak(k)) << to_string(f) << " " << c.reason;
    }
  }
}

TEST(RecognitionProperty, AgreesWithMuCorank) {
  Gen gen(44);
  for (std::int64_t k = 1; k <= 5; ++k) {
    const Weights w = hs_test::ak_weights(k);
    const Poly f = hs_test::ak_normal_form(k) + hs_test::random_higher_terms(gen, z_variables(), w, 3, static_cast<unsigned>(k + 2));
    const auto a = recognize_with_weights(f, w);
    const auto b = classify_mu_corank(f);
    EXPECT_EQ(a.label(), b.label()) << to_string(f);
  }
}
