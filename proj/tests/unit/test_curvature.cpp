#include <gtest/gtest.h>

#include <vbgeo/curvature.hpp>
#include <vbgeo/errors.hpp>
#include <vbgeo/finite_difference.hpp>

#include <cmath>

using namespace vbgeo;

TEST(Curvature, ZeroSectionTensorHasRiemannSymmetries) {
  const BaseChart s4 = model_chart(ChartKind::sphere, 4);
  const TotalSpace s(s4, lambda2_bundle(s4, Orientation::minus), bryant_salamon_profile(1, 1, 1));
  Vec x(4);
  x << 0.1, -0.2, 0.05, 0.3;
  EXPECT_LT(riemann_symmetry_residual(zero_section_tensor(s, x)), 1e-13);
}

TEST(Curvature, ConstantWeightsProductIsBaseCurvature) {
  // trivial bundle, constant weights: a Riemannian product; horizontal block is e^{2c} R^M
  const BaseChart s2 = model_chart(ChartKind::sphere, 2);
  const double c = 0.3;
  const TotalSpace s(s2, trivial_bundle(s2, 2), constant_profile(c, -0.1));
  const TotalPoint p{Vec::Constant(2, 0.1), Vec::Constant(2, 0.2)};
  const Tensor4 t = flat_bundle_tensor(s, p);
  const Tensor4 base = s2.riemann(p.x);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) EXPECT_NEAR(t(i, j, k, l), std::exp(2 * c) * base(i, j, k, l), 1e-13);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(t(i, 2, 2, i), 0.0, 1e-15);
}

TEST(Curvature, FlatFormulasRejectCurvedBundles) {
  const BaseChart s4 = model_chart(ChartKind::sphere, 4);
  const TotalSpace s(s4, lambda2_bundle(s4, Orientation::minus), bryant_salamon_profile(1, 1, 1));
  EXPECT_THROW(flat_bundle_tensor(s, {Vec::Zero(4), Vec::Constant(3, 0.1)}), InvalidArgument);
}

TEST(Curvature, EinsteinCheckNeedsEinsteinBase) {
  Vec lo = Vec::Constant(2, -1), hi = Vec::Constant(2, 1);
  const BaseChart warped = expression_chart(2, {{"1", "0"}, {"0", "exp(x1)"}}, {lo, hi});
  const TotalSpace s(warped, trivial_bundle(warped, 1), constant_profile(0, 0));
  // every surface is Einstein
  EXPECT_NO_THROW(einstein_check(s, Vec::Zero(2)));
  const BaseChart w3 = expression_chart(3, {{"1", "0", "0"}, {"0", "exp(x1)", "0"}, {"0", "0", "1"}},
                                        {Vec::Constant(3, -1), Vec::Constant(3, 1)});
  const TotalSpace s3(w3, trivial_bundle(w3, 1), constant_profile(0, 0));
  EXPECT_THROW(einstein_check(s3, Vec::Zero(3)), InvalidArgument);
}

TEST(Curvature, FibreScalarExample) {
  // phi2 = r, k = 3 at y = e1
  const FiberCurvatures f = fiber_curvatures(expression_profile("0", "r"), 3, Vec::Unit(3, 0));
  EXPECT_NEAR(f.scalar, -32 * std::exp(-2.0), 1e-12);
  EXPECT_DOUBLE_EQ(f.sectional(1, 2), f.sectional(2, 1));
  EXPECT_EQ(f.sectional(0, 0), 0.0);
}

TEST(Curvature, OracleRefusesBoundary) {
  const BaseChart h = model_chart(ChartKind::hyperbolic, 2);
  const TotalSpace s(h, trivial_bundle(h, 1), constant_profile(0, 0));
  const Vec edge = h.domain().hi - Vec::Constant(2, 1e-4);
  EXPECT_THROW(fd_riemann_oracle(s, {edge, Vec::Zero(1)}), DomainError);
}
