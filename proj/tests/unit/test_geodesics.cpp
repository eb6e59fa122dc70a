#include <gtest/gtest.h>

#include <vbgeo/errors.hpp>
#include <vbgeo/geodesics.hpp>

#include <cmath>
#include <sstream>

using namespace vbgeo;

TEST(Geodesics, FlatSpaceMovesInStraightLines) {
  const BaseChart c = model_chart(ChartKind::flat, 2);
  const TotalSpace s(c, trivial_bundle(c, 1), constant_profile(0.0, 0.0));
  const GeodesicState st = state_from_velocity(s, Vec::Zero(2), Vec::Constant(1, 0.1),
                                               Vec::Constant(2, 0.5), Vec::Constant(1, -0.2));
  const Trajectory tr = integrate(s, st, 1.0, 0.1);
  EXPECT_EQ(tr.status, TrajectoryStatus::completed);
  EXPECT_NEAR(tr.final_state().gamma(0), 0.5, 1e-14);
  EXPECT_NEAR(tr.final_state().y(0), -0.1, 1e-14);
  EXPECT_EQ(tr.t.size(), 11u);
}

TEST(Geodesics, FinalPartialStepLandsOnTEnd) {
  const BaseChart c = model_chart(ChartKind::flat, 1);
  const TotalSpace s(c, trivial_bundle(c, 1), constant_profile(0.0, 0.0));
  const GeodesicState st = state_from_velocity(s, Vec::Zero(1), Vec::Zero(1), Vec::Ones(1), Vec::Zero(1));
  const Trajectory tr = integrate(s, st, 0.25, 0.1);
  EXPECT_DOUBLE_EQ(tr.t.back(), 0.25);
}

TEST(Geodesics, BoundaryExitStopsIntegration) {
  const BaseChart h = model_chart(ChartKind::hyperbolic, 4);
  const TotalSpace s(h, lambda2_bundle(h, Orientation::plus), bryant_salamon_profile(1, 2, -1));
  // purely vertical motion heads for the disk bound r < 1
  const GeodesicState st = state_from_velocity(s, Vec::Zero(4), Vec::Constant(3, 0.1), Vec::Zero(4),
                                               Vec::Constant(3, 2.0));
  const Trajectory tr = integrate(s, st, 10.0, 1e-2);
  EXPECT_EQ(tr.status, TrajectoryStatus::boundary_exit);
  EXPECT_TRUE(s.contains(tr.final_state().point()));
  EXPECT_LT(tr.t.back(), 10.0);
}

TEST(Geodesics, RejectsBadSteps) {
  const BaseChart c = model_chart(ChartKind::flat, 1);
  const TotalSpace s(c, trivial_bundle(c, 1), constant_profile(0.0, 0.0));
  const GeodesicState st{Vec::Zero(1), Vec::Zero(1), Vec::Zero(1), Vec::Zero(1)};
  EXPECT_THROW(integrate(s, st, 1.0, 0.0), InvalidArgument);
  EXPECT_THROW(integrate(s, st, -1.0, 0.1), InvalidArgument);
}

TEST(Geodesics, SpeedIsTheWeightedNorm) {
  const BaseChart c = model_chart(ChartKind::flat, 2);
  const TotalSpace s(c, trivial_bundle(c, 2), constant_profile(0.5, -0.25));
  const GeodesicState st = state_from_velocity(s, Vec::Zero(2), Vec::Zero(2), Vec::Constant(2, 1.0),
                                               Vec::Constant(2, 2.0));
  EXPECT_NEAR(speed(s, st), std::sqrt(2 * std::exp(1.0) + 8 * std::exp(-0.5)), 1e-14);
}

TEST(Geodesics, CsvLayout) {
  const BaseChart c = model_chart(ChartKind::flat, 2);
  const TotalSpace s(c, trivial_bundle(c, 1), constant_profile(0.0, 0.0));
  const GeodesicState st = state_from_velocity(s, Vec::Zero(2), Vec::Zero(1), Vec::Ones(2), Vec::Zero(1));
  std::ostringstream os;
  write_trajectory_csv(os, integrate(s, st, 0.2, 0.1));
  std::istringstream in(os.str());
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header, "t,gamma_0,gamma_1,y_0,dgamma_0,dgamma_1,z_0,speed");
  int rows = 0;
  while (std::getline(in, row)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Geodesics, BryantSalamonGenericStartConservesSpeed) {
  const BaseChart c = model_chart(ChartKind::sphere, 4);
  const TotalSpace s(c, lambda2_bundle(c, Orientation::minus), bryant_salamon_profile(1, 1, 1));
  Vec x(4), y(3), dx(4), dy(3);
  x << 0.1, -0.2, 0.15, 0.05;
  y << 0.3, -0.1, 0.2;
  dx << 0.3, 0.1, -0.2, 0.25;
  dy << -0.2, 0.3, 0.1;
  const Trajectory tr = integrate(s, state_from_velocity(s, x, y, dx, dy), 1.0, 1e-3);
  EXPECT_EQ(tr.status, TrajectoryStatus::completed);
  EXPECT_LT(tr.max_relative_speed_drift, 1e-8);
}
