#include <gtest/gtest.h>

#include <vbgeo/errors.hpp>
#include <vbgeo/holonomy.hpp>

using namespace vbgeo;

namespace {

SkewOperator rotation(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1;
  m(j, i) = -1;
  return {m};
}

}  // namespace

TEST(Holonomy, Classification) {
  EXPECT_EQ(classify(7, 21), "so(7)");
  EXPECT_EQ(classify(7, 14), "g2-dimension");
  EXPECT_EQ(classify(4, 6), "so(4)");
  EXPECT_EQ(classify(4, 2), "dim=2");
}

TEST(Holonomy, ClosureGeneratesSo3FromTwoRotations) {
  const HolonomyResult h = lie_closure({rotation(3, 0, 1), rotation(3, 1, 2)});
  EXPECT_EQ(h.dimension, 3);
  EXPECT_EQ(h.classification, "so(3)");
  EXPECT_GE(h.closure_rounds, 1);
}

TEST(Holonomy, SingleRotationIsAbelian) {
  EXPECT_EQ(lie_closure({rotation(3, 0, 1)}).dimension, 1);
}

TEST(Holonomy, CommutingGeneratorsStayAbelian) {
  const HolonomyResult h = lie_closure({rotation(4, 0, 1), rotation(4, 2, 3)});
  EXPECT_EQ(h.dimension, 2);
}

TEST(Holonomy, EmptyAndZeroGenerators) {
  EXPECT_EQ(lie_closure({SkewOperator{Mat::Zero(3, 3)}}).dimension, 0);
}

TEST(Holonomy, SpanRankReportsGap) {
  SkewOperator a = rotation(3, 0, 1), b = rotation(3, 0, 1);
  b.matrix *= 2;
  const SpanInfo s = span_rank({a, b, rotation(3, 0, 2)});
  EXPECT_EQ(s.rank, 2);
  EXPECT_LT(s.largest_discarded, 1e-12);
}

TEST(Holonomy, SphereBaseIsFullSo4) {
  EXPECT_EQ(base_holonomy(model_chart(ChartKind::sphere, 4), Vec::Zero(4)).dimension, 6);
  EXPECT_EQ(base_holonomy(model_chart(ChartKind::flat, 3), Vec::Zero(3)).dimension, 0);
}

TEST(Holonomy, G2PairingEnforced) {
  EXPECT_NO_THROW(require_g2_pairing(model_chart(ChartKind::sphere, 4), BundleKind::lambda2_minus));
  EXPECT_THROW(require_g2_pairing(model_chart(ChartKind::sphere, 4), BundleKind::lambda2_plus),
               InvalidArgument);
  EXPECT_THROW(require_g2_pairing(model_chart(ChartKind::hyperbolic, 4), BundleKind::lambda2_minus),
               InvalidArgument);
}

TEST(Holonomy, GeneratorsAreSkewInTheWeightedFrame) {
  const TotalSpace s = g2_space(G2Base::sphere4, 1.0, 1.0);
  for (const auto& g : curvature_generators(s, Vec::Zero(4))) EXPECT_LT(g.op.skew_residual(), 1e-13);
}

TEST(Holonomy, FlatScenarioCases) {
  const BaseChart plane = model_chart(ChartKind::flat, 2);
  const FlatHolonomyReport r =
      flat_holonomy_scenario(plane, 2, expression_profile("r/2", "r/2"), Vec::Zero(2));
  EXPECT_EQ(r.holonomy.dimension, 6);
  EXPECT_TRUE(r.consistent);
}

TEST(Holonomy, FlatScenarioVerticalCase) {
  // phi1' = 0 != phi2' over a round 2-sphere: at least hol(S^2) + o(2)
  const BaseChart s2 = model_chart(ChartKind::sphere, 2);
  const FlatHolonomyReport r = flat_holonomy_scenario(s2, 2, expression_profile("0", "r"), Vec::Zero(2));
  EXPECT_EQ(r.proposition_case, "ii");
  EXPECT_EQ(r.base_dimension, 1);
  EXPECT_GE(r.holonomy.dimension, 2);
  EXPECT_TRUE(r.consistent);
}

TEST(Holonomy, ConstantWeightsOverFlatBaseAreTrivial) {
  const BaseChart plane = model_chart(ChartKind::flat, 3);
  const FlatHolonomyReport r = flat_holonomy_scenario(plane, 4, constant_profile(0.2, 0.7), Vec::Zero(3));
  EXPECT_EQ(r.proposition_case, "iii");
  EXPECT_EQ(r.holonomy.dimension, 0);
}
