#include <gtest/gtest.h>

#include <vbgeo/errors.hpp>
#include <vbgeo/total_space.hpp>
#include <vbgeo/types.hpp>

#include <cmath>

using namespace vbgeo;

namespace {

TotalSpace tangent_s3() {
  const BaseChart c = model_chart(ChartKind::sphere, 3);
  return TotalSpace(c, tangent_bundle(c), expression_profile("0.2*r", "-0.1*r + 0.05"));
}

TotalPoint sample_point() {
  Vec x(3), y(3);
  x << 0.1, -0.2, 0.3;
  y << 0.4, 0.1, -0.3;
  return {x, y};
}

}  // namespace

TEST(TotalSpace, SplitRoundTrip) {
  const TotalSpace s = tangent_s3();
  const PointGeometry pg = s.at(sample_point());
  Vec v(6);
  v << 1, -2, 0.5, 0.3, 0.7, -1;
  EXPECT_LT((pg.unsplit(pg.split(v)) - v).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(TotalSpace, MetricBlocks) {
  const TotalSpace s = tangent_s3();
  const TotalPoint p = sample_point();
  const PointGeometry pg = s.at(p);
  const MetricAtPoint g = pg.metric();
  const Mat& P = pg.frame_change();
  EXPECT_LT((P.transpose() * g.split_matrix * P - g.matrix).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((g.matrix - s.coordinate_metric(p.coords())).cwiseAbs().maxCoeff(), 1e-14);
  const WeightValues w = s.weights().evaluate(p.r());
  EXPECT_NEAR(g.split_matrix(4, 4), std::exp(2 * w.phi2), 1e-15);
  EXPECT_NEAR(g.split_matrix(0, 0), std::exp(2 * w.phi1) * s.base().metric(p.x)(0, 0), 1e-15);
  EXPECT_LT(g.split_matrix.block(0, 3, 3, 3).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(TotalSpace, XiIsVertical) {
  const TotalSpace s = tangent_s3();
  const TotalPoint p = sample_point();
  const SplitVector xi = s.at(p).xi();
  EXPECT_EQ(xi.h.norm(), 0.0);
  EXPECT_EQ(xi.v, p.y);
}

TEST(TotalSpace, DomainErrors) {
  const BaseChart h = model_chart(ChartKind::hyperbolic, 4);
  const TotalSpace s(h, lambda2_bundle(h, Orientation::plus), bryant_salamon_profile(1, 2, -1));
  EXPECT_THROW(s.at({Vec::Zero(4), Vec::Constant(3, 0.7)}), DomainError);  // r = 1.47 >= 1
  EXPECT_THROW(s.at({Vec::Zero(4), Vec::Zero(2)}), InvalidArgument);
  EXPECT_NO_THROW(s.at({Vec::Zero(4), Vec::Constant(3, 0.5)}));
}

TEST(TotalSpace, MismatchedBundleRejected) {
  const BaseChart a = model_chart(ChartKind::flat, 2), b = model_chart(ChartKind::flat, 3);
  EXPECT_THROW(TotalSpace(a, trivial_bundle(b, 2), constant_profile(0, 0)), InvalidArgument);
}

TEST(TotalSpace, ConstantWeightsOverFlatBaseAreFlat) {
  // g = e^{2c1}|dx|^2 + e^{2c2}|dy|^2 on a trivial bundle: every covariant derivative of a constant
  // coordinate field vanishes
  const BaseChart c = model_chart(ChartKind::flat, 2);
  const TotalSpace s(c, trivial_bundle(c, 2), constant_profile(0.3, -0.4));
  const PointGeometry pg = s.at({Vec::Constant(2, 0.2), Vec::Constant(2, 0.5)});
  const SplitVector X{Vec::Constant(2, 1.0), Vec::Constant(2, -0.5)};
  Vec dir(4);
  dir << 0.2, 1, -1, 0.5;
  const SplitVector out = pg.levi_civita(X, VectorField::coordinate(dir, Mat::Zero(4, 4)));
  EXPECT_LT(out.max_abs(), 1e-15);
}

TEST(RadialDeformation, Validation) {
  EXPECT_NO_THROW(RadialDeformation::sinh().validate());
  EXPECT_NO_THROW(RadialDeformation::cubic().validate());
  RadialDeformation shifted{"shifted", [](double t) { return t + 0.1; }};
  EXPECT_THROW(shifted.validate(), InvalidArgument);
  RadialDeformation even{"even", [](double t) { return t + t * t; }};
  EXPECT_THROW(even.validate(), InvalidArgument);
}

TEST(RadialDeformation, IdentityLeavesMetricUnchanged) {
  const TotalSpace s = tangent_s3();
  const PointGeometry pg = s.at(sample_point());
  EXPECT_LT((pg.bergery_metric(RadialDeformation::identity()).matrix - pg.metric().matrix)
                .cwiseAbs()
                .maxCoeff(),
            1e-14);
  EXPECT_THROW(s.at({sample_point().x, Vec::Zero(3)}).conformal_check(RadialDeformation::sinh()),
               DomainError);
}

TEST(TotalSpace, WeightsMustBeRegularAtZeroSection) {
  const BaseChart c = model_chart(ChartKind::flat, 2);
  EXPECT_THROW(TotalSpace(c, trivial_bundle(c, 2), expression_profile("sqrt(r)", "0")), InvalidArgument);
  EXPECT_THROW(TotalSpace(c, trivial_bundle(c, 2), expression_profile("0", "log(r)")), InvalidArgument);
  EXPECT_NO_THROW(TotalSpace(c, trivial_bundle(c, 2), expression_profile("r^2", "r")));
}
