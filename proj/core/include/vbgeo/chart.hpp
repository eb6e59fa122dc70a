#pragma once

#include "vbgeo/finite_difference.hpp"
#include "vbgeo/types.hpp"

#include <memory>
#include <string>
#include <vector>

namespace vbgeo {

enum class ChartKind { flat, sphere, hyperbolic, custom };

struct DomainBox {
  Vec lo, hi;

  bool contains(const Vec& x) const;
  // x stays inside after widening by `pad` in every coordinate direction
  bool contains_padded(const Vec& x, double pad) const;
  // uniform sample in the box shrunk by `margin` (fraction of each side) on both ends
  Vec sample(Rng& rng, double margin = 0.1) const;
  Vec center() const { return 0.5 * (lo + hi); }
};

struct ChartImpl;

// Single coordinate chart of a Riemannian manifold. Curvature conventions:
// riemann(x)(i,j,k,l) = g(R(d_i,d_j)d_k, d_l), so a sphere has R(i,j,j,i) > 0.
class BaseChart {
 public:
  BaseChart() = default;
  explicit BaseChart(std::shared_ptr<const ChartImpl> impl) : impl_(std::move(impl)) {}

  int dim() const;
  ChartKind kind() const;
  const std::string& label() const;
  const DomainBox& domain() const;
  bool analytic() const;
  bool is_flat() const;
  // sectional curvature for model charts (0 for flat), NaN for custom charts
  double model_curvature() const;

  Mat metric(const Vec& x) const;
  std::vector<Mat> metric_derivative(const Vec& x) const;  // [c](a,b) = d_c g_ab
  std::vector<Mat> christoffel(const Vec& x) const;        // [a](b,c) = Gamma^a_{bc}
  Tensor4 riemann(const Vec& x) const;

  // checks the point lies in the domain box; throws DomainError otherwise
  void require_inside(const Vec& x) const;

 private:
  std::shared_ptr<const ChartImpl> impl_;
};

// Model spaces in the conformal chart g = (2/(1 + eps kappa |x|^2))^2 delta,
// eps = +1 for the sphere (curvature kappa), -1 for hyperbolic space (-kappa).
BaseChart model_chart(ChartKind kind, int m, double curv = 1.0);

// Chart given by closed-form metric entries in the variables x1..xm;
// Christoffels and Riemann are evaluated from symbolic derivatives.
BaseChart expression_chart(int m, const std::vector<std::vector<std::string>>& metric,
                           DomainBox domain, std::string label = "custom");

// Chart given by a metric callback; Christoffels and Riemann by finite differences
// (step 1e-4), with one Richardson step when the curvature symmetries fail at 1e-4.
BaseChart callback_chart(int m, MetricFn metric, DomainBox domain,
                         std::string label = "custom");

// Gram-Schmidt orthonormal frame of the coordinate frame in column order.
// g = L L^T; coframe theta = L^T dx; frame vectors are the columns of F = L^{-T}.
struct OrthonormalFrame {
  Mat L;
  Mat F;
};
OrthonormalFrame orthonormal_frame(const Mat& g);

// Levi-Civita connection in the Gram-Schmidt frame: [i](a,b) = theta^a(nabla_i E_b).
// Uses the analytic derivative of the Cholesky factor, so it is exact whenever the
// chart's metric derivative is.
std::vector<Mat> frame_connection(const BaseChart& chart, const Vec& x);

}  // namespace vbgeo
