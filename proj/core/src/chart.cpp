#include "vbgeo/chart.hpp"

#include "vbgeo/errors.hpp"
#include "vbgeo/expr.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace vbgeo {

struct ChartImpl {
  int m = 0;
  ChartKind kind = ChartKind::custom;
  std::string label;
  DomainBox domain;
  bool analytic = false;
  bool flat = false;
  double model_curvature = std::numeric_limits<double>::quiet_NaN();

  virtual ~ChartImpl() = default;
  virtual Mat metric(const Vec& x) const = 0;
  virtual std::vector<Mat> metric_derivative(const Vec& x) const = 0;
  virtual std::vector<Mat> christoffel(const Vec& x) const {
    return christoffel_from_derivative(metric(x), metric_derivative(x));
  }
  virtual Tensor4 riemann(const Vec& x) const = 0;
};

bool DomainBox::contains(const Vec& x) const {
  if (x.size() != lo.size()) return false;
  for (int i = 0; i < x.size(); ++i)
    if (!(x(i) > lo(i) && x(i) < hi(i))) return false;
  return true;
}

bool DomainBox::contains_padded(const Vec& x, double pad) const {
  if (x.size() != lo.size()) return false;
  for (int i = 0; i < x.size(); ++i)
    if (!(x(i) - pad > lo(i) && x(i) + pad < hi(i))) return false;
  return true;
}

Vec DomainBox::sample(Rng& rng, double margin) const {
  Vec x(lo.size());
  for (int i = 0; i < x.size(); ++i) {
    const double w = hi(i) - lo(i);
    x(i) = rng.uniform(lo(i) + margin * w, hi(i) - margin * w);
  }
  return x;
}

namespace {

DomainBox cube(int m, double half) {
  return {Vec::Constant(m, -half), Vec::Constant(m, half)};
}

// g = lambda^2 delta with lambda = 2/(1 + eps kappa |x|^2); flat uses lambda = 1.
struct ConformalModel final : ChartImpl {
  double eps = 0, kappa = 0;

  double lambda(const Vec& x) const {
    return flat ? 1.0 : 2.0 / (1.0 + eps * kappa * x.squaredNorm());
  }
  // gradient of log lambda
  Vec dlog(const Vec& x) const {
    if (flat) return Vec::Zero(m);
    const double q = 1.0 + eps * kappa * x.squaredNorm();
    return (-2.0 * eps * kappa / q) * x;
  }
  Mat metric(const Vec& x) const override {
    const double l = lambda(x);
    return Mat::Identity(m, m) * (l * l);
  }
  std::vector<Mat> metric_derivative(const Vec& x) const override {
    const double l2 = lambda(x) * lambda(x);
    const Vec f = dlog(x);
    std::vector<Mat> dg(m);
    for (int c = 0; c < m; ++c) dg[c] = Mat::Identity(m, m) * (2.0 * l2 * f(c));
    return dg;
  }
  std::vector<Mat> christoffel(const Vec& x) const override {
    const Vec f = dlog(x);
    std::vector<Mat> gam(m, Mat::Zero(m, m));
    for (int c = 0; c < m; ++c)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          gam[c](i, j) = (c == i ? f(j) : 0.0) + (c == j ? f(i) : 0.0) - (i == j ? f(c) : 0.0);
    return gam;
  }
  Tensor4 riemann(const Vec& x) const override {
    Tensor4 r(m);
    if (flat) return r;
    const double k = model_curvature;
    const double l2 = lambda(x) * lambda(x);
    // R(X,Y)Z = K(<Y,Z>X - <X,Z>Y), g = l2 delta
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        r(i, j, j, i) = k * l2 * l2;
        r(i, j, i, j) = -k * l2 * l2;
      }
    return r;
  }
};

struct ExpressionChart final : ChartImpl {
  std::vector<std::vector<Expr>> g;                 // (a,b)
  std::vector<std::vector<std::vector<Expr>>> dg;   // [c](a,b)
  std::vector<std::vector<std::vector<std::vector<Expr>>>> ddg;  // [c][d](a,b)

  Mat eval(const std::vector<std::vector<Expr>>& e, const Vec& x) const {
    Mat out(m, m);
    const std::span<const double> v(x.data(), static_cast<std::size_t>(x.size()));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) out(a, b) = e[a][b].eval(v);
    return out;
  }
  Mat metric(const Vec& x) const override { return eval(g, x); }
  std::vector<Mat> metric_derivative(const Vec& x) const override {
    std::vector<Mat> out(m);
    for (int c = 0; c < m; ++c) out[c] = eval(dg[c], x);
    return out;
  }
  Tensor4 riemann(const Vec& x) const override {
    const Mat gx = metric(x);
    const Mat gi = gx.inverse();
    const auto d1 = metric_derivative(x);
    std::vector<std::vector<Mat>> d2(m, std::vector<Mat>(m));
    for (int c = 0; c < m; ++c)
      for (int d = 0; d < m; ++d) d2[c][d] = eval(ddg[c][d], x);
    const auto gam = christoffel_from_derivative(gx, d1);
    // d_c Gamma^a_{bd} = (d_c g^{al}) G_{l,bd} + g^{al} d_c G_{l,bd}
    std::vector<std::vector<Mat>> dgam(m, std::vector<Mat>(m, Mat::Zero(m, m)));
    for (int c = 0; c < m; ++c) {
      const Mat dgi = -gi * d1[c] * gi;
      std::vector<Mat> first(m, Mat::Zero(m, m)), dfirst(m, Mat::Zero(m, m));
      for (int l = 0; l < m; ++l)
        for (int b = 0; b < m; ++b)
          for (int d = 0; d < m; ++d) {
            first[l](b, d) = 0.5 * (d1[b](l, d) + d1[d](l, b) - d1[l](b, d));
            dfirst[l](b, d) = 0.5 * (d2[c][b](l, d) + d2[c][d](l, b) - d2[c][l](b, d));
          }
      for (int a = 0; a < m; ++a)
        for (int l = 0; l < m; ++l) dgam[c][a] += dgi(a, l) * first[l] + gi(a, l) * dfirst[l];
    }
    return riemann_from_christoffel(gx, gam, dgam);
  }
};

struct CallbackChart final : ChartImpl {
  MetricFn fn;
  static constexpr double kStep = 1e-4;

  Mat metric(const Vec& x) const override { return fn(x); }
  std::vector<Mat> metric_derivative(const Vec& x) const override {
    return fd_metric_derivative(fn, x, kStep);
  }
  Tensor4 riemann(const Vec& x) const override {
    Tensor4 r = fd_riemann(fn, x, kStep, kStep);
    if (riemann_symmetry_residual(r) <= 1e-4 * std::max(1.0, r.max_abs())) return r;
    Tensor4 half = fd_riemann(fn, x, kStep / 2, kStep / 2);
    half *= 4.0 / 3.0;
    r *= -1.0 / 3.0;
    half += r;
    return half;
  }
};

}  // namespace

int BaseChart::dim() const { return impl_->m; }
ChartKind BaseChart::kind() const { return impl_->kind; }
const std::string& BaseChart::label() const { return impl_->label; }
const DomainBox& BaseChart::domain() const { return impl_->domain; }
bool BaseChart::analytic() const { return impl_->analytic; }
bool BaseChart::is_flat() const { return impl_->flat; }
double BaseChart::model_curvature() const { return impl_->model_curvature; }

void BaseChart::require_inside(const Vec& x) const {
  if (x.size() != impl_->m)
    throw InvalidArgument("base point has dimension " + std::to_string(x.size()) +
                          ", chart has " + std::to_string(impl_->m));
  if (!impl_->domain.contains(x)) {
    std::ostringstream os;
    os.precision(17);
    os << "base point (" << x.transpose() << ") outside the chart domain of " << impl_->label;
    throw DomainError(os.str());
  }
}

Mat BaseChart::metric(const Vec& x) const { return impl_->metric(x); }
std::vector<Mat> BaseChart::metric_derivative(const Vec& x) const {
  return impl_->metric_derivative(x);
}
std::vector<Mat> BaseChart::christoffel(const Vec& x) const { return impl_->christoffel(x); }
Tensor4 BaseChart::riemann(const Vec& x) const { return impl_->riemann(x); }

BaseChart model_chart(ChartKind kind, int m, double curv) {
  if (m < 1) throw InvalidArgument("chart dimension must be >= 1");
  auto c = std::make_shared<ConformalModel>();
  c->m = m;
  c->kind = kind;
  c->analytic = true;
  switch (kind) {
    case ChartKind::flat:
      c->flat = true;
      c->label = "flat";
      c->model_curvature = 0;
      c->domain = cube(m, 2.0);
      break;
    case ChartKind::sphere:
    case ChartKind::hyperbolic: {
      if (!(curv > 0)) throw InvalidArgument("model curvature kappa must be positive");
      const bool sphere = kind == ChartKind::sphere;
      c->eps = sphere ? 1.0 : -1.0;
      c->kappa = curv;
      c->model_curvature = c->eps * curv;
      c->label = sphere ? "sphere" : "hyperbolic";
      // the hyperbolic chart is the ball |x| < 1/sqrt(kappa); keep the box inside it
      c->domain = sphere ? cube(m, 2.0 / std::sqrt(curv))
                         : cube(m, 0.99 / std::sqrt(curv * m));
      break;
    }
    case ChartKind::custom:
      throw InvalidArgument("custom charts are built from expressions or callbacks");
  }
  return BaseChart(c);
}

BaseChart expression_chart(int m, const std::vector<std::vector<std::string>>& metric,
                           DomainBox domain, std::string label) {
  if (m < 1) throw InvalidArgument("chart dimension must be >= 1");
  if (static_cast<int>(metric.size()) != m)
    throw InvalidArgument("metric must have " + std::to_string(m) + " rows");
  if (domain.lo.size() != m || domain.hi.size() != m)
    throw InvalidArgument("domain box dimension mismatch");
  std::vector<std::string> vars;
  for (int i = 0; i < m; ++i) vars.push_back("x" + std::to_string(i + 1));
  auto c = std::make_shared<ExpressionChart>();
  c->m = m;
  c->kind = ChartKind::custom;
  c->label = std::move(label);
  c->domain = std::move(domain);
  c->analytic = true;
  c->g.assign(m, std::vector<Expr>(m));
  for (int a = 0; a < m; ++a) {
    if (static_cast<int>(metric[a].size()) != m)
      throw InvalidArgument("metric row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < m; ++b) c->g[a][b] = Expr::parse(metric[a][b], vars);
  }
  c->dg.assign(m, std::vector<std::vector<Expr>>(m, std::vector<Expr>(m)));
  c->ddg.assign(m, std::vector<std::vector<std::vector<Expr>>>(
                       m, std::vector<std::vector<Expr>>(m, std::vector<Expr>(m))));
  for (int cc = 0; cc < m; ++cc)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) c->dg[cc][a][b] = c->g[a][b].derivative(cc);
  for (int cc = 0; cc < m; ++cc)
    for (int d = 0; d < m; ++d)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) c->ddg[cc][d][a][b] = c->dg[d][a][b].derivative(cc);
  for (double t : {0.5, 0.3, 0.71}) {
    const Mat g0 = c->metric(c->domain.lo + t * (c->domain.hi - c->domain.lo));
    if ((g0 - g0.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw InvalidArgument("custom metric is not symmetric");
  }
  return BaseChart(c);
}

BaseChart callback_chart(int m, MetricFn metric, DomainBox domain, std::string label) {
  if (m < 1) throw InvalidArgument("chart dimension must be >= 1");
  auto c = std::make_shared<CallbackChart>();
  c->m = m;
  c->kind = ChartKind::custom;
  c->label = std::move(label);
  c->domain = std::move(domain);
  c->fn = std::move(metric);
  return BaseChart(c);
}

OrthonormalFrame orthonormal_frame(const Mat& g) {
  Eigen::LLT<Mat> llt(g);
  if (llt.info() != Eigen::Success) throw DomainError("metric is not positive definite");
  OrthonormalFrame f;
  f.L = llt.matrixL();
  f.F = f.L.transpose().inverse();
  return f;
}

std::vector<Mat> frame_connection(const BaseChart& chart, const Vec& x) {
  const int m = chart.dim();
  const OrthonormalFrame fr = orthonormal_frame(chart.metric(x));
  const auto dg = chart.metric_derivative(x);
  const auto gam = chart.christoffel(x);
  const Mat Linv = fr.L.inverse();
  std::vector<Mat> out(m);
  for (int i = 0; i < m; ++i) {
    // dL = L Phi(L^{-1} dg L^{-T}), Phi = strict lower part + half diagonal
    Mat s = Linv * dg[i] * Linv.transpose();
    Mat phi = s.triangularView<Eigen::StrictlyLower>();
    phi.diagonal() = 0.5 * s.diagonal();
    const Mat dL = fr.L * phi;
    const Mat dF = -fr.F * dL.transpose() * fr.F;
    Mat gi(m, m);  // gi(a,c) = Gamma^a_{ic}
    for (int a = 0; a < m; ++a) gi.row(a) = gam[a].row(i);
    out[i] = fr.L.transpose() * (dF + gi * fr.F);
  }
  return out;
}

}  // namespace vbgeo
