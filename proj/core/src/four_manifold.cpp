#include "vbgeo/four_manifold.hpp"

#include "vbgeo/errors.hpp"

#include <cmath>

namespace vbgeo {

namespace {

Mat twoform(int a, int b) {
  Mat m = Mat::Zero(4, 4);
  m(a, b) = 1;
  m(b, a) = -1;
  return m;
}

}  // namespace

std::array<Mat, 3> lambda2_frame(Orientation sign) {
  const double s = sign == Orientation::plus ? 1.0 : -1.0;
  return {twoform(0, 1) + s * twoform(2, 3), twoform(0, 2) - s * twoform(1, 3),
          twoform(0, 3) + s * twoform(1, 2)};
}

double lambda2_inner(const Mat& a, const Mat& b) { return 0.25 * a.cwiseProduct(b).sum(); }

FourManifoldCurvatureOperator curvature_operator(const BaseChart& chart, const Vec& x) {
  if (chart.dim() != 4) throw InvalidArgument("curvature operator needs a 4-dimensional chart");
  const Mat F = orthonormal_frame(chart.metric(x)).F;
  const Tensor4 R = change_basis(chart.riemann(x), F);
  const auto plus = lambda2_frame(Orientation::plus);
  const auto minus = lambda2_frame(Orientation::minus);
  std::array<Mat, 6> unit;
  for (int i = 0; i < 3; ++i) {
    unit[i] = plus[i] / std::sqrt(2.0);
    unit[3 + i] = minus[i] / std::sqrt(2.0);
  }
  FourManifoldCurvatureOperator op;
  for (int A = 0; A < 6; ++A)
    for (int B = 0; B < 6; ++B) {
      double v = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
          if (unit[A](a, b) == 0.0) continue;
          for (int c = 0; c < 4; ++c)
            for (int d = c + 1; d < 4; ++d)
              v -= unit[A](a, b) * unit[B](c, d) * R(a, b, c, d);
        }
      op.blocks(A, B) = v;
    }
  op.s = op.blocks.trace() / 6.0;
  op.W_plus = op.blocks.topLeftCorner<3, 3>() - op.s * Mat3::Identity();
  op.W_minus = op.blocks.bottomRightCorner<3, 3>() - op.s * Mat3::Identity();
  op.ric0 = op.blocks.topRightCorner<3, 3>();
  return op;
}

std::array<Mat, 3> lambda2_rho(const FourManifoldCurvatureOperator& op, Orientation sign) {
  // entries on the unnormalised e_{+-,j}, which have squared norm 2
  const Mat6 R = 2.0 * op.blocks;
  const auto plus = lambda2_frame(Orientation::plus);
  const auto minus = lambda2_frame(Orientation::minus);
  std::array<Mat, 3> rho;
  for (int i = 0; i < 3; ++i) {
    rho[i] = Mat::Zero(4, 4);
    for (int j = 0; j < 3; ++j) {
      double on_plus, on_minus;  // rho^i(e_{+,j}), rho^i(e_{-,j})
      if (sign == Orientation::plus) {
        on_plus = -R(i, j);
        on_minus = -R(i, 3 + j);
      } else {
        on_plus = R(j, 3 + i);
        on_minus = R(3 + i, 3 + j);
      }
      // a 2-form with w(e_{+-,j}) = c_j is (1/2) sum_j c_j e^j
      rho[i] += 0.5 * (on_plus * plus[j] + on_minus * minus[j]);
    }
  }
  return rho;
}

}  // namespace vbgeo
