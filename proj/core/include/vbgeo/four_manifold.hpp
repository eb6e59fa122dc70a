#pragma once

#include "vbgeo/bundle.hpp"
#include "vbgeo/chart.hpp"

#include <Eigen/Dense>
#include <array>

namespace vbgeo {

using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// Curvature operator on 2-forms, <R(e_a ^ e_b), e_c ^ e_d> = -g(R(E_a,E_b)E_c,E_d),
// in the unit basis (e^i_+/sqrt2, e^i_-/sqrt2) built on the Gram-Schmidt coframe.
struct FourManifoldCurvatureOperator {
  Mat6 blocks = Mat6::Zero();
  double s = 0;  // Scal/12
  Mat3 W_plus = Mat3::Zero();
  Mat3 W_minus = Mat3::Zero();
  Mat3 ric0 = Mat3::Zero();  // (Lambda+, Lambda-) off-diagonal block
};

FourManifoldCurvatureOperator curvature_operator(const BaseChart& chart, const Vec& x);

// The frame e^1, e^2, e^3 of Lambda^2_+ or Lambda^2_- as skew 4x4 matrices in the
// orthonormal coframe.
std::array<Mat, 3> lambda2_frame(Orientation sign);
double lambda2_inner(const Mat& a, const Mat& b);  // (1/4) sum a_ij b_ij

// The 2-forms rho^i with R^E e^i = rho^k e^j - rho^j e^k over cycles (ijk) = (123),
// read off the curvature operator:
//   rho_+^i(e_{+,j}) = -R_ij, rho_+^i(e_{-,j}) = -R_{i jbar},
//   rho_-^i(e_{+,j}) = +R_{j ibar}, rho_-^i(e_{-,j}) = +R_{ibar jbar},
// with R_.. the operator entries on the unnormalised e_{+-,j}. Returned as skew 4x4
// matrices in the orthonormal coframe.
std::array<Mat, 3> lambda2_rho(const FourManifoldCurvatureOperator& op, Orientation sign);

}  // namespace vbgeo
