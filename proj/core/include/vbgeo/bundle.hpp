#pragma once

#include "vbgeo/chart.hpp"
#include "vbgeo/types.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vbgeo {

enum class BundleKind { trivial, tangent, lambda2_plus, lambda2_minus, custom };
enum class Orientation { plus, minus };

// gamma[i](alpha, beta) = Gamma^{E,beta}_{i alpha}, i.e. D_{d_i} e_alpha = Gamma^{E,beta}_{i alpha} e_beta
using BundleGammaFn = std::function<std::vector<Mat>(const Vec&)>;
// curvature(beta, alpha, i, j) = <R^E(d_i, d_j) e_alpha, e_beta>
using BundleCurvatureFn = std::function<Tensor4(const Vec&)>;

struct BundleImpl;

// Metric connection on a rank-k bundle over a chart, written in an orthonormal frame.
class BundleConnection {
 public:
  BundleConnection() = default;
  explicit BundleConnection(std::shared_ptr<const BundleImpl> impl) : impl_(std::move(impl)) {}

  int rank() const;
  BundleKind kind() const;
  bool is_flat() const;
  bool is_tangent_bundle() const;
  const BaseChart& base() const;

  std::vector<Mat> gamma(const Vec& x) const;
  // d[c][i] = d_c gamma[i]
  std::vector<std::vector<Mat>> gamma_derivative(const Vec& x) const;
  Tensor4 curvature(const Vec& x) const;

 private:
  std::shared_ptr<const BundleImpl> impl_;
};

BundleConnection trivial_bundle(const BaseChart& chart, int k);
BundleConnection tangent_bundle(const BaseChart& chart);
// Bundle of self-dual (plus) or anti-self-dual (minus) 2-forms of a 4-dimensional
// chart, in the frame e1 = th01 +- th23, e2 = th02 -+ th13, e3 = th03 +- th12 of the
// Gram-Schmidt coframe, normalised by <A,B>_E = (1/4) sum A_ab B_ab.
BundleConnection lambda2_bundle(const BaseChart& chart, Orientation sign);
// Arbitrary metric connection; curvature by central differences when not supplied.
BundleConnection custom_bundle(const BaseChart& chart, int k, BundleGammaFn gamma,
                               std::optional<BundleCurvatureFn> curvature = std::nullopt,
                               bool flat = false);

std::string to_string(BundleKind kind);

}  // namespace vbgeo
