#include <gtest/gtest.h>

#include "support.hpp"

using namespace hypersing;

namespace {

const std::vector<Rat> kOrigin{1, 0, 0, 0, 0};

Poly X(const char* text) { return parse_poly(text, x_variables()); }

}  // namespace

TEST(Locus, FamilyAUnitParameters) {
  const auto r = unique_projective_singularity(X("x0*(x4^2 + x1*x2) + x1*x3*(x1 + x3) + x2^3"), kOrigin);
  EXPECT_TRUE(r.is_unique_at_point);
  ASSERT_TRUE(r.milnor_number_at_point.has_value());
  EXPECT_EQ(*r.milnor_number_at_point, 5u);
  ASSERT_EQ(r.chart_diagnostics.size(), 5u);
  EXPECT_TRUE(r.chart_diagnostics[0].contains_point);
  EXPECT_EQ(r.chart_diagnostics[0].eliminants.size(), 4u);
}

TEST(Locus, SmoothFermatCubicHasNoSingularPoint) {
  const auto r = unique_projective_singularity(X("x0^3 + x1^3 + x2^3 + x3^3 + x4^3"), {1, -1, 0, 0, 0});
  EXPECT_FALSE(r.is_unique_at_point);
  EXPECT_FALSE(r.milnor_number_at_point.has_value());
  EXPECT_NE(r.chart_diagnostics[0].outcome.find("empty"), std::string::npos);
}

TEST(Locus, QuadricConePoint) {
  const auto r = unique_projective_singularity(X("x1^2 + x2^2 + x3^2 + x4^2"), kOrigin);
  EXPECT_TRUE(r.is_unique_at_point);
  EXPECT_EQ(*r.milnor_number_at_point, 1u);
}

TEST(Locus, SecondSingularPointIsDetected) {
  // Singular at [1,0,0,0,0] and at [0,1,0,0,0].
  const Poly F = X("x0*x1*x2 + x2^3 + x3^3 + x4^3");
  const auto r = unique_projective_singularity(F, kOrigin);
  EXPECT_FALSE(r.is_unique_at_point);
  EXPECT_NE(r.chart_diagnostics[1].outcome.find("exist"), std::string::npos);
  const auto s = unique_projective_singularity(F, {0, 1, 0, 0, 0});
  EXPECT_FALSE(s.is_unique_at_point);
}

TEST(Locus, NonIsolatedSingularLocus) {
  // Singular along the line x2 = x3 = x4 = 0.
  const auto r = unique_projective_singularity(X("x2^2*x0 + x3^2*x1 + x4^3"), kOrigin);
  EXPECT_FALSE(r.is_unique_at_point);
}

TEST(Locus, PointNotRequiredToBeNormalized) {
  const auto r = unique_projective_singularity(X("x1^2 + x2^2 + x3^2 + x4^2"), {Rat(-3), 0, 0, 0, 0});
  EXPECT_TRUE(r.is_unique_at_point);
}

TEST(Locus, Errors) {
  EXPECT_THROW(unique_projective_singularity(X("x0 + x1^2"), kOrigin), PreconditionError);
  EXPECT_THROW(unique_projective_singularity(X("x0^2 + x1^2"), kOrigin), PreconditionError);
  EXPECT_THROW(unique_projective_singularity(X("x1^2 + x2^2"), {0, 0, 0, 0, 0}), PreconditionError);
  EXPECT_THROW(unique_projective_singularity(X("x1 + x2"), kOrigin), PreconditionError);
}

TEST(Curves, Smoothness) {
  const std::vector<std::string> v{"x2", "x3"};
  // Family A, a = b = 1: F0(0,1,x2,x3) = x3 + x3^2 + x2^3.
  EXPECT_TRUE(is_smooth_affine_curve(parse_poly("x3*(1 + x3) + x2^3", v)));
  EXPECT_FALSE(is_smooth_affine_curve(parse_poly("x2^2 - x3^3", v)));
  EXPECT_TRUE(is_smooth_affine_curve(parse_poly("x2", v)));
  EXPECT_THROW(is_smooth_affine_curve(parse_poly("7", v)), PreconditionError);
}

TEST(Curves, SingularOnlyAtOrigin) {
  const std::vector<std::string> v{"x2", "x3"};
  EXPECT_TRUE(singular_only_at_origin(parse_poly("x2^2 + 3*x3^3", v)));
  EXPECT_FALSE(singular_only_at_origin(parse_poly("(x2 - 1)^2 - x3^3", v)));
  EXPECT_FALSE(singular_only_at_origin(parse_poly("x2 + x3^2", v)));
  EXPECT_FALSE(singular_only_at_origin(parse_poly("x2^2", v)));
}

TEST(LocalMilnor, NormalFormsAreGloballySupported) {
  for (std::int64_t k = 1; k <= 6; ++k) {
    const auto c = local_milnor_certificate(hs_test::ak_normal_form(k), 32, true);
    EXPECT_TRUE(c.isolated);
    EXPECT_TRUE(c.jacobian_supported_at_origin);
    EXPECT_EQ(*c.milnor_number, static_cast<std::size_t>(k));
  }
}

TEST(LocalMilnor, FamilyAChartHasFarCriticalPoints) {
  const std::vector<std::string> v{"x1", "x2", "x3", "x4"};
  const auto c = local_milnor_certificate(parse_poly("x4^2 + x1*x2 + x1^2*x3 + x1*x3^2 + x2^3", v), 32, true);
  EXPECT_TRUE(c.isolated);
  EXPECT_FALSE(c.jacobian_supported_at_origin);
  EXPECT_EQ(*c.milnor_number, 5u);
  EXPECT_GT(c.truncation_order, 0u);
}

TEST(LocalMilnor, MorsePlusFarCriticalPoint) {
  // z^2 - z^3: critical points 0 (Morse) and 2/3.
  const std::vector<std::string> v{"z1"};
  const auto c = local_milnor_certificate(parse_poly("z1^2 - z1^3", v));
  EXPECT_EQ(*c.milnor_number, 1u);
}

TEST(LocalMilnor, NonIsolated) {
  const auto c = local_milnor_certificate(parse_poly("z2^2 + z3^2 + z4^2", z_variables()), 8);
  EXPECT_FALSE(c.isolated);
  EXPECT_THROW(local_milnor_certificate(parse_poly("z1 + z2^2", z_variables())), PreconditionError);
}
