#include <gtest/gtest.h>

#include <vbgeo/errors.hpp>
#include <vbgeo/expr.hpp>
#include <vbgeo/weights.hpp>

#include <cmath>
#include <vector>

using namespace vbgeo;

TEST(Expr, EvaluatesAndDifferentiates) {
  const Expr f = Expr::parse("r^2*exp(-r) + sin(r)/2", {"r"});
  const double r = 0.7;
  EXPECT_NEAR(f.eval(r), r * r * std::exp(-r) + std::sin(r) / 2, 1e-15);
  EXPECT_NEAR(f.derivative(0).eval(r), (2 * r - r * r) * std::exp(-r) + std::cos(r) / 2, 1e-14);
  EXPECT_FALSE(f.is_constant());
  EXPECT_TRUE(Expr::parse("2*3 - 1", {"r"}).is_constant());
}

TEST(Expr, RejectsMalformedText) {
  EXPECT_THROW(Expr::parse("r +", {"r"}), ParseError);
  EXPECT_THROW(Expr::parse("q*2", {"r"}), ParseError);
  EXPECT_THROW(Expr::parse("(r", {"r"}), ParseError);
}

TEST(Weights, CoefficientRelations) {
  const WeightProfile w = expression_profile("0.3*r + 0.1", "-0.2*r^2");
  for (double r : {0.0, 0.4, 1.7}) {
    const WeightValues v = w.evaluate(r);
    const ConnectionCoefficients c = coefficients(v);
    EXPECT_DOUBLE_EQ(c.a, 2 * v.dphi1);
    EXPECT_DOUBLE_EQ(c.b, 2 * v.dphi2);
    EXPECT_DOUBLE_EQ(c.c2, -c.b);
    EXPECT_NEAR(c.c1, -c.a * std::exp(2 * (v.phi1 - v.phi2)), 1e-15);
  }
}

TEST(Weights, BryantSalamonDiskBound) {
  const WeightProfile w = bryant_salamon_profile(1.0, 2.0, -1.0);
  EXPECT_DOUBLE_EQ(w.r_max(), 1.0);  // 2 c0^2 s r + c1 > 0
  EXPECT_NO_THROW(w.evaluate(0.99));
  EXPECT_THROW(w.evaluate(1.0), DomainError);
  EXPECT_THROW(w.evaluate(-0.1), DomainError);
  EXPECT_TRUE(std::isinf(bryant_salamon_profile(1.0, 1.0, 1.0).r_max()));
}

TEST(Weights, BryantSalamonProfileShape) {
  const double c0 = 0.8, c1 = 1.3, s = 0.6, r = 0.9;
  const WeightProfile w = bryant_salamon_profile(c0, c1, s);
  const double q = 2 * c0 * c0 * s * r + c1;
  EXPECT_NEAR(std::exp(2 * w.phi1(r)), std::sqrt(q), 1e-14);
  EXPECT_NEAR(std::exp(2 * w.phi2(r)), c0 * c0 / std::sqrt(q), 1e-14);
  EXPECT_DOUBLE_EQ(w.dphi1(r), -w.dphi2(r));
}

TEST(Weights, ConstantFlag) {
  EXPECT_TRUE(constant_profile(0.1, 0.2).is_constant());
  EXPECT_TRUE(expression_profile("1", "2*3").is_constant());
  EXPECT_FALSE(expression_profile("r", "0").is_constant());
  EXPECT_TRUE(bryant_salamon_profile(1, 1, 0).is_constant());
}

TEST(Weights, RejectsBadParameters) {
  EXPECT_THROW(bryant_salamon_profile(0, 1, 1), InvalidArgument);
  EXPECT_THROW(bryant_salamon_profile(1, -1, 1), InvalidArgument);
  EXPECT_THROW(kahler_disk_profile(0, 1), InvalidArgument);
  EXPECT_THROW(expression_profile("r", "r", -1), InvalidArgument);
  EXPECT_THROW(builtin_profile(ProfileKind::custom, {}), InvalidArgument);
}

TEST(Weights, DerivativeCheckAgreesForBuiltins) {
  const std::vector<double> radii{0.1, 0.5, 0.8};
  for (const WeightProfile& w : {bryant_salamon_profile(1, 2, -1), kahler_disk_profile(1.5, 0.8),
                                 expression_profile("sinh(r)", "log(1 + r)")}) {
    const DerivativeCheck d = check_derivatives(w, radii);
    EXPECT_LT(d.first, 1e-6) << w.kind();
    EXPECT_LT(d.second, 1e-6) << w.kind();
  }
}

TEST(Weights, DerivativeCheckStencilMustStayInDomain) {
  const std::vector<double> radii{0.0};
  EXPECT_THROW(check_derivatives(constant_profile(0, 0), radii), DomainError);
}
