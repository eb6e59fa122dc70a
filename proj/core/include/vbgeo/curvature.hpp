#pragma once

#include "vbgeo/total_space.hpp"

#include <optional>

namespace vbgeo {

// All 4-tensors below use R(X,Y,Z,W) = g(R(X,Y)Z, W) with
// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.

// Closed form at o = (x, 0), coefficients taken at r = 0.
double zero_section_curvature(const TotalSpace& space, const Vec& x, const SplitVector& X,
                              const SplitVector& Y, const SplitVector& Z, const SplitVector& W);
// Full tensor in the basis (pi* d_i, pi* e_alpha) at o.
Tensor4 zero_section_tensor(const TotalSpace& space, const Vec& x);

// R(X,Y)Z for a flat bundle, valid at every point.
SplitVector flat_bundle_curvature(const TotalSpace& space, const TotalPoint& p,
                                  const SplitVector& X, const SplitVector& Y,
                                  const SplitVector& Z);
// Full lowered tensor in the split basis at p.
Tensor4 flat_bundle_tensor(const TotalSpace& space, const TotalPoint& p);

struct FiberCurvatures {
  Mat sectional;       // (alpha, beta) coordinate-plane sectional curvature, zero diagonal
  Vec ricci_diagonal;  // ric(d_beta, d_beta)
  double scalar = 0;
};

// Curvatures of e^{2 phi2(r)} sum (dy)^2 on R^k at y.
FiberCurvatures fiber_curvatures(const WeightProfile& w, int k, const Vec& y);

struct CurvatureReport {
  Tensor4 riemann;  // split basis at o
  Mat ricci;        // split basis at o, traced from riemann
  double scalar = 0;
  Mat ricci_closed_form;  // block formulas: ric^M - k a e^{2phi1-2phi2} g, 0, (2b(1-k) - a m) I
  double scalar_closed_form = 0;
  std::optional<double> einstein_lambda;  // ric = lambda g when it holds to 1e-8
};

CurvatureReport ricci_scalar_zero_section(const TotalSpace& space, const Vec& x);
// Ricci tensor of the base chart at x, ric(b,c) = g^{ae} R(a,b,c,e).
Mat base_ricci(const BaseChart& base, const Vec& x);
// Ricci and scalar curvature by tracing any tensor given in the split basis at o.
Mat ricci_from_tensor(const TotalSpace& space, const Vec& x, const Tensor4& r);

struct EinsteinCheck {
  double lambda_M = 0;
  double residual_first = 0;   // lambda_M e^{2phi2-2phi1} + a(m-k) + 2b(k-1)
  double residual_second = 0;  // (2b(1-k) - am)e^{-2phi2} - (lambda_M e^{-2phi1} - a k e^{-2phi2})
  std::optional<double> lambda_E;
};

// Throws InvalidArgument when the base is not Einstein at x (relative tolerance 1e-8).
EinsteinCheck einstein_check(const TotalSpace& space, const Vec& x);

// Independent oracle: Christoffels of the assembled coordinate metric by central
// differences (step 1e-5), Riemann by differencing those at steps 2e-3 and 1e-3
// combined by Richardson extrapolation.
Tensor4 fd_riemann_oracle(const TotalSpace& space, const TotalPoint& p);
// The oracle rewritten in the split basis at p.
Tensor4 fd_riemann_oracle_split(const TotalSpace& space, const TotalPoint& p);

// Zero-section oracle: the split-basis oracle averaged over +-delta*u, delta in
// {1e-2, 5e-3}, then one Richardson step in delta^2.
Tensor4 zero_section_oracle(const TotalSpace& space, const Vec& x, const Vec& direction);

}  // namespace vbgeo
