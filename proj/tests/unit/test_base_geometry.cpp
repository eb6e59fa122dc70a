#include <gtest/gtest.h>

#include <vbgeo/bundle.hpp>
#include <vbgeo/chart.hpp>
#include <vbgeo/errors.hpp>
#include <vbgeo/finite_difference.hpp>
#include <vbgeo/four_manifold.hpp>

#include <cmath>

using namespace vbgeo;

namespace {

double sectional(const BaseChart& c, const Vec& x, int i, int j) {
  const Mat g = c.metric(x);
  return c.riemann(x)(i, j, j, i) / (g(i, i) * g(j, j) - g(i, j) * g(i, j));
}

}  // namespace

TEST(ModelCharts, SectionalCurvatureSigns) {
  Vec x = Vec::Zero(4);
  x(0) = 0.2;
  x(2) = -0.1;
  const double kappa = 0.7;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      EXPECT_NEAR(sectional(model_chart(ChartKind::sphere, 4, kappa), x, i, j), kappa, 1e-12);
      EXPECT_NEAR(sectional(model_chart(ChartKind::hyperbolic, 4, kappa), x, i, j), -kappa, 1e-12);
      EXPECT_NEAR(sectional(model_chart(ChartKind::flat, 4), x, i, j), 0.0, 1e-15);
    }
}

TEST(ModelCharts, RiemannSymmetries) {
  const BaseChart c = model_chart(ChartKind::hyperbolic, 3, 1.2);
  Vec x(3);
  x << 0.1, -0.3, 0.2;
  EXPECT_LT(riemann_symmetry_residual(c.riemann(x)), 1e-13);
}

TEST(ModelCharts, DomainAndErrors) {
  const BaseChart h = model_chart(ChartKind::hyperbolic, 2, 1.0);
  EXPECT_TRUE(h.domain().contains(h.domain().center()));
  EXPECT_THROW(h.require_inside(Vec::Constant(2, 5.0)), DomainError);
  EXPECT_THROW(h.require_inside(Vec::Zero(3)), InvalidArgument);
  EXPECT_THROW(model_chart(ChartKind::sphere, 0), InvalidArgument);
  EXPECT_THROW(model_chart(ChartKind::sphere, 2, -1.0), InvalidArgument);
}

TEST(CustomCharts, ExpressionChartMatchesModel) {
  // round sphere of curvature 1 in the same conformal chart
  const std::string f = "4/(1 + x1^2 + x2^2)^2";
  DomainBox box{Vec::Constant(2, -1.0), Vec::Constant(2, 1.0)};
  const BaseChart custom = expression_chart(2, {{f, "0"}, {"0", f}}, box);
  Vec x(2);
  x << 0.3, -0.2;
  EXPECT_NEAR(sectional(custom, x, 0, 1), 1.0, 1e-6);
  EXPECT_TRUE(custom.analytic());  // symbolic derivatives
  EXPECT_THROW(expression_chart(2, {{"1", "x1"}, {"0", "1"}}, box), InvalidArgument);
}

TEST(Frames, OrthonormalFrameIsInverseCholesky) {
  Mat g(3, 3);
  g << 2, 0.3, 0.1, 0.3, 1.5, -0.2, 0.1, -0.2, 1;
  const OrthonormalFrame fr = orthonormal_frame(g);
  EXPECT_LT((fr.L * fr.L.transpose() - g).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((fr.F.transpose() * g * fr.F - Mat::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_THROW(orthonormal_frame(-g), DomainError);
}

TEST(Lambda2, FrameIsOrthonormalAndDual) {
  for (Orientation o : {Orientation::plus, Orientation::minus}) {
    const auto e = lambda2_frame(o);
    for (int a = 0; a < 3; ++a) {
      EXPECT_LT((e[a] + e[a].transpose()).cwiseAbs().maxCoeff(), 1e-15);
      for (int b = 0; b < 3; ++b) EXPECT_NEAR(lambda2_inner(e[a], e[b]), a == b ? 1.0 : 0.0, 1e-15);
    }
    // opposite orientations are orthogonal
    const auto f = lambda2_frame(o == Orientation::plus ? Orientation::minus : Orientation::plus);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) EXPECT_NEAR(lambda2_inner(e[a], f[b]), 0.0, 1e-15);
  }
}

TEST(Lambda2, RoundSphereOperator) {
  const BaseChart s4 = model_chart(ChartKind::sphere, 4, 1.0);
  const auto op = curvature_operator(s4, Vec::Zero(4));
  EXPECT_NEAR(op.s, 1.0, 1e-12);  // Scal = 12 on the unit 4-sphere
  EXPECT_LT(op.W_plus.cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(op.W_minus.cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(op.ric0.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Bundles, RanksAndFlatness) {
  const BaseChart s4 = model_chart(ChartKind::sphere, 4);
  EXPECT_EQ(trivial_bundle(s4, 3).rank(), 3);
  EXPECT_TRUE(trivial_bundle(s4, 3).is_flat());
  EXPECT_EQ(tangent_bundle(s4).rank(), 4);
  EXPECT_FALSE(tangent_bundle(s4).is_flat());
  EXPECT_TRUE(tangent_bundle(model_chart(ChartKind::flat, 3)).is_flat());
  EXPECT_EQ(lambda2_bundle(s4, Orientation::minus).rank(), 3);
  EXPECT_THROW(lambda2_bundle(model_chart(ChartKind::sphere, 3), Orientation::plus), InvalidArgument);
}

TEST(Bundles, CurvatureMatchesConnectionDerivative) {
  // closed-form Lambda2 curvature vs the generic route through gamma derivatives
  const BaseChart s4 = model_chart(ChartKind::sphere, 4, 1.3);
  const BundleConnection e = lambda2_bundle(s4, Orientation::plus);
  const BundleConnection generic = custom_bundle(s4, 3, [e](const Vec& x) { return e.gamma(x); });
  Vec x(4);
  x << 0.1, 0.2, -0.1, 0.05;
  EXPECT_LT(Tensor4::max_abs_diff(e.curvature(x), generic.curvature(x)), 1e-9);
}
