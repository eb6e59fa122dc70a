#pragma once

#include "vbgeo/bundle.hpp"
#include "vbgeo/chart.hpp"
#include "vbgeo/types.hpp"
#include "vbgeo/weights.hpp"

#include <functional>
#include <string>
#include <vector>

namespace vbgeo {

struct TotalPoint {
  Vec x;  // base coordinates
  Vec y;  // fibre coordinates in the orthonormal frame e_alpha
  double r() const { return y.squaredNorm(); }
  Vec coords() const;  // (x, y)
  static TotalPoint from_coords(const Vec& z, int m);
};

// Tangent vector of E in the frame (pi* d_i, pi* e_alpha).
struct SplitVector {
  Vec h;
  Vec v;
  SplitVector() = default;
  SplitVector(Vec h_, Vec v_) : h(std::move(h_)), v(std::move(v_)) {}
  static SplitVector zero(int m, int k) { return {Vec::Zero(m), Vec::Zero(k)}; }
  Vec stacked() const;
  static SplitVector from_stacked(const Vec& s, int m);
  SplitVector operator+(const SplitVector& o) const { return {h + o.h, v + o.v}; }
  SplitVector operator-(const SplitVector& o) const { return {h - o.h, v - o.v}; }
  SplitVector operator*(double s) const { return {h * s, v * s}; }
  double max_abs() const;
};

struct MetricAtPoint {
  Mat matrix;        // coordinate frame (d_x, d_y)
  Mat split_matrix;  // diag(e^{2phi1} g, e^{2phi2} I) in the split frame
};

// A vector field near a point: its components at the point and the Jacobian of those
// components with respect to the coordinates (x, y). Either representation may be
// used; coordinate fields are converted internally, including the derivative of
// the splitting.
struct VectorField {
  enum class Frame { split, coordinate };
  Frame frame = Frame::split;
  Vec value;     // length m+k
  Mat jacobian;  // (m+k) x (m+k): row = component, column = d/dx^i then d/dy^alpha

  static VectorField split(const SplitVector& value, Mat jacobian);
  static VectorField coordinate(Vec value, Mat jacobian);
  // The tautological field xi: split components (0, y), constant Jacobian.
  static VectorField tautological(int m, int k, const Vec& y);
};

// Odd radial deformation f(t), t = sqrt(r), with f(0) = 0 and f'(0) = 1.
struct RadialDeformation {
  std::string name;
  std::function<double(double)> f;
  static RadialDeformation identity();
  static RadialDeformation sinh();
  static RadialDeformation cubic();  // t + t^3/6
  // throws InvalidArgument when oddness or the normalisation fails at probe points
  void validate() const;
};

class PointGeometry;

// The total space of the bundle with the weighted metric
// g = e^{2 phi1} pi* g_M + e^{2 phi2} pi* g_E.
class TotalSpace {
 public:
  TotalSpace(BaseChart base, BundleConnection bundle, WeightProfile weights);

  int base_dim() const { return m_; }
  int rank() const { return k_; }
  int dim() const { return m_ + k_; }
  const BaseChart& base() const { return base_; }
  const BundleConnection& bundle() const { return bundle_; }
  const WeightProfile& weights() const { return weights_; }

  bool contains(const TotalPoint& p) const;
  void require_inside(const TotalPoint& p) const;
  PointGeometry at(const TotalPoint& p) const;

  // coordinate-frame metric; convenience for finite-difference oracles
  Mat coordinate_metric(const Vec& z) const;

 private:
  BaseChart base_;
  BundleConnection bundle_;
  WeightProfile weights_;
  int m_, k_;
};

// Everything needed to evaluate the metric, splitting and connection at one point.
class PointGeometry {
 public:
  PointGeometry(const TotalSpace& space, const TotalPoint& p);

  const TotalPoint& point() const { return p_; }
  const WeightValues& weights() const { return w_; }
  const ConnectionCoefficients& coeffs() const { return c_; }
  const Mat& base_metric() const { return g_; }
  const Mat& base_metric_inverse() const { return ginv_; }
  const std::vector<Mat>& base_christoffel() const { return gam_; }
  const std::vector<Mat>& bundle_gamma() const { return gamE_; }
  const Tensor4& bundle_curvature() const { return RE_; }
  // P = [[I, 0], [K, I]], K(beta,i) = y^alpha Gamma^{E,beta}_{i alpha}; split = P coords
  const Mat& frame_change() const { return P_; }

  SplitVector split(const Vec& coord) const;
  Vec unsplit(const SplitVector& s) const;
  SplitVector xi() const;

  MetricAtPoint metric() const;
  double inner(const SplitVector& a, const SplitVector& b) const;  // weighted
  double inner_M(const SplitVector& a, const SplitVector& b) const;  // unweighted <,>_M
  double inner_E(const SplitVector& a, const SplitVector& b) const;  // unweighted <,>_E

  // R^E(X^h, Y^h) applied to a fibre vector u, in the e_alpha frame
  Vec bundle_curvature_apply(const Vec& xh, const Vec& yh, const Vec& u) const;

  SplitVector tensor_C(const SplitVector& X, const SplitVector& Y) const;
  SplitVector tensor_A(const SplitVector& X, const SplitVector& Y) const;
  SplitVector calR(const SplitVector& X, const SplitVector& Y) const;

  // Directional derivative of the field's split components along X.
  SplitVector directional_derivative(const SplitVector& X, const VectorField& Y) const;
  // D** + C
  SplitVector d_tilde(const SplitVector& X, const VectorField& Y) const;
  // Levi-Civita connection through the four component equations.
  SplitVector levi_civita(const SplitVector& X, const VectorField& Y) const;
  // g(nabla_Y X, Z) + g(Y, nabla_Z X)
  double killing_residual(const VectorField& X, const SplitVector& Y,
                          const SplitVector& Z) const;

  // g_{M,E} + f3 xi^flat (x) xi^flat in the coordinate frame (unweighted xi^flat)
  MetricAtPoint musso_tricerri(double f3) const;
  // fibre metric replaced by e^{2phi2}[(f^2/r)(I - y y^T/r) + y y^T/r]
  MetricAtPoint bergery_metric(const RadialDeformation& f) const;
  // max |g_{M,E,f} - (f^2/r) g^{MT}|, g^{MT} built with horizontal factor (r/f^2) e^{2phi1}
  // and f3 = e^{2phi2}(1/f^2 - 1/r)
  double conformal_check(const RadialDeformation& f) const;

  Vec xi_flat_coordinates() const;  // xi^flat as a covector on coordinate vectors

 private:
  SplitVector split_field_value(const VectorField& Y) const;
  Mat split_field_jacobian(const VectorField& Y) const;

  const TotalSpace* space_;
  TotalPoint p_;
  int m_, k_;
  WeightValues w_;
  ConnectionCoefficients c_;
  Mat g_, ginv_;
  std::vector<Mat> gam_;
  std::vector<Mat> gamE_;
  Tensor4 RE_;
  Mat P_;
};

}  // namespace vbgeo
