#include "vbgeo/bundle.hpp"

#include "vbgeo/errors.hpp"
#include "vbgeo/four_manifold.hpp"

#include <cmath>

namespace vbgeo {

struct BundleImpl {
  BaseChart chart;
  int k = 0;
  BundleKind kind = BundleKind::custom;
  bool flat = false;
  bool tangent = false;

  virtual ~BundleImpl() = default;
  virtual std::vector<Mat> gamma(const Vec& x) const = 0;
  virtual std::vector<std::vector<Mat>> gamma_derivative(const Vec& x) const {
    const int m = chart.dim();
    std::vector<std::vector<Mat>> d(m);
    for (int c = 0; c < m; ++c) {
      // five-point stencil
      const double h = 3e-4 * std::max(1.0, std::abs(x(c)));
      auto at = [&](double t) {
        Vec xs = x;
        xs(c) += t;
        return gamma(xs);
      };
      const auto gp2 = at(2 * h), gp = at(h), gm = at(-h), gm2 = at(-2 * h);
      d[c].resize(m);
      for (int i = 0; i < m; ++i) d[c][i] = (8 * (gp[i] - gm[i]) - (gp2[i] - gm2[i])) / (12 * h);
    }
    return d;
  }
  virtual Tensor4 curvature(const Vec& x) const {
    // A_i(beta,alpha) = gamma[i](alpha,beta); R_ij = d_i A_j - d_j A_i + [A_i, A_j]
    const int m = chart.dim();
    const auto g = gamma(x);
    const auto dg = gamma_derivative(x);
    Tensor4 r(k, k, m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const Mat Ai = g[i].transpose(), Aj = g[j].transpose();
        const Mat R = dg[i][j].transpose() - dg[j][i].transpose() + Ai * Aj - Aj * Ai;
        for (int b = 0; b < k; ++b)
          for (int a = 0; a < k; ++a) r(b, a, i, j) = R(b, a);
      }
    return r;
  }
};

namespace {

struct TrivialBundle final : BundleImpl {
  std::vector<Mat> gamma(const Vec&) const override {
    return std::vector<Mat>(chart.dim(), Mat::Zero(k, k));
  }
  std::vector<std::vector<Mat>> gamma_derivative(const Vec&) const override {
    const int m = chart.dim();
    return std::vector<std::vector<Mat>>(m, std::vector<Mat>(m, Mat::Zero(k, k)));
  }
  Tensor4 curvature(const Vec&) const override { return Tensor4(k, k, chart.dim(), chart.dim()); }
};

struct TangentBundle final : BundleImpl {
  std::vector<Mat> gamma(const Vec& x) const override {
    auto g = frame_connection(chart, x);
    for (auto& gi : g) gi.transposeInPlace();
    return g;
  }
  Tensor4 curvature(const Vec& x) const override {
    const int m = chart.dim();
    if (flat) return Tensor4(m, m, m, m);
    const Mat F = orthonormal_frame(chart.metric(x)).F;
    const Tensor4 R = chart.riemann(x);
    // <R(d_i,d_j)E_a, E_b> = R(i,j,k,l) F(k,a) F(l,b)
    Tensor4 out(m, m, m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Mat Rij(m, m);
        for (int kk = 0; kk < m; ++kk)
          for (int l = 0; l < m; ++l) Rij(kk, l) = R(i, j, kk, l);
        const Mat Ron = F.transpose() * Rij * F;  // (a, b)
        for (int b = 0; b < m; ++b)
          for (int a = 0; a < m; ++a) out(b, a, i, j) = Ron(a, b);
      }
    return out;
  }
};

struct Lambda2Bundle final : BundleImpl {
  Orientation sign = Orientation::minus;
  std::array<Mat, 3> basis;

  std::vector<Mat> gamma(const Vec& x) const override {
    const auto G = frame_connection(chart, x);
    std::vector<Mat> out(4, Mat::Zero(3, 3));
    for (int i = 0; i < 4; ++i)
      for (int a = 0; a < 3; ++a) {
        const Mat D = G[i] * basis[a] - basis[a] * G[i];
        for (int b = 0; b < 3; ++b) out[i](a, b) = lambda2_inner(D, basis[b]);
      }
    return out;
  }
  Tensor4 curvature(const Vec& x) const override {
    Tensor4 out(3, 3, 4, 4);
    if (flat) return out;
    const auto op = curvature_operator(chart, x);
    const auto rho = lambda2_rho(op, sign);
    const Mat L = orthonormal_frame(chart.metric(x)).L;
    std::array<Mat, 3> rc;
    for (int q = 0; q < 3; ++q) rc[q] = L * rho[q] * L.transpose();
    // R^E e^i = rho^k e^j - rho^j e^k over cycles (ijk)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int c = 0; c < 3; ++c) {
          const int a = c, b = (c + 1) % 3, d = (c + 2) % 3;
          out(b, a, i, j) = rc[d](i, j);
          out(d, a, i, j) = -rc[b](i, j);
        }
    return out;
  }
};

struct CustomBundle final : BundleImpl {
  BundleGammaFn fn;
  std::optional<BundleCurvatureFn> curv;

  std::vector<Mat> gamma(const Vec& x) const override { return fn(x); }
  Tensor4 curvature(const Vec& x) const override {
    if (curv) return (*curv)(x);
    return BundleImpl::curvature(x);
  }
};

}  // namespace

int BundleConnection::rank() const { return impl_->k; }
BundleKind BundleConnection::kind() const { return impl_->kind; }
bool BundleConnection::is_flat() const { return impl_->flat; }
bool BundleConnection::is_tangent_bundle() const { return impl_->tangent; }
const BaseChart& BundleConnection::base() const { return impl_->chart; }
std::vector<Mat> BundleConnection::gamma(const Vec& x) const { return impl_->gamma(x); }
std::vector<std::vector<Mat>> BundleConnection::gamma_derivative(const Vec& x) const {
  return impl_->gamma_derivative(x);
}
Tensor4 BundleConnection::curvature(const Vec& x) const { return impl_->curvature(x); }

BundleConnection trivial_bundle(const BaseChart& chart, int k) {
  if (k < 1) throw InvalidArgument("bundle rank must be >= 1");
  auto b = std::make_shared<TrivialBundle>();
  b->chart = chart;
  b->k = k;
  b->kind = BundleKind::trivial;
  b->flat = true;
  return BundleConnection(b);
}

BundleConnection tangent_bundle(const BaseChart& chart) {
  auto b = std::make_shared<TangentBundle>();
  b->chart = chart;
  b->k = chart.dim();
  b->kind = BundleKind::tangent;
  b->flat = chart.is_flat();
  b->tangent = true;
  return BundleConnection(b);
}

BundleConnection lambda2_bundle(const BaseChart& chart, Orientation sign) {
  if (chart.dim() != 4) throw InvalidArgument("Lambda^2 bundles need a 4-dimensional base");
  auto b = std::make_shared<Lambda2Bundle>();
  b->chart = chart;
  b->k = 3;
  b->kind = sign == Orientation::plus ? BundleKind::lambda2_plus : BundleKind::lambda2_minus;
  b->flat = chart.is_flat();
  b->sign = sign;
  b->basis = lambda2_frame(sign);
  return BundleConnection(b);
}

BundleConnection custom_bundle(const BaseChart& chart, int k, BundleGammaFn gamma,
                               std::optional<BundleCurvatureFn> curvature, bool flat) {
  if (k < 1) throw InvalidArgument("bundle rank must be >= 1");
  auto b = std::make_shared<CustomBundle>();
  b->chart = chart;
  b->k = k;
  b->kind = BundleKind::custom;
  b->flat = flat;
  b->fn = std::move(gamma);
  b->curv = std::move(curvature);
  return BundleConnection(b);
}

std::string to_string(BundleKind kind) {
  switch (kind) {
    case BundleKind::trivial: return "trivial";
    case BundleKind::tangent: return "tangent";
    case BundleKind::lambda2_plus: return "lambda2_plus";
    case BundleKind::lambda2_minus: return "lambda2_minus";
    case BundleKind::custom: return "custom";
  }
  return "custom";
}

}  // namespace vbgeo
