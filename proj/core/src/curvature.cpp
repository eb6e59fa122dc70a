#include "vbgeo/curvature.hpp"

#include "vbgeo/errors.hpp"
#include "vbgeo/finite_difference.hpp"

#include <cmath>

namespace vbgeo {

namespace {

// Data of the closed form at o = (x, 0).
struct ZeroSection {
  int m = 0, k = 0;
  double E1 = 1, E2 = 1, a = 0, b = 0;
  Mat g;
  Tensor4 RM, RE;

  ZeroSection(const TotalSpace& space, const Vec& x) : m(space.base_dim()), k(space.rank()) {
    const PointGeometry pg = space.at({x, Vec::Zero(k)});
    E1 = std::exp(2 * pg.weights().phi1);
    E2 = std::exp(2 * pg.weights().phi2);
    a = pg.coeffs().a;
    b = pg.coeffs().b;
    g = pg.base_metric();
    RM = space.base().riemann(x);
    RE = pg.bundle_curvature();
  }

  double rm(const Vec& X, const Vec& Y, const Vec& Z, const Vec& W) const {
    double s = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const double xy = X(i) * Y(j);
        if (xy == 0.0) continue;
        for (int p = 0; p < m; ++p)
          for (int q = 0; q < m; ++q) s += xy * Z(p) * W(q) * RM(i, j, p, q);
      }
    return s;
  }
  // <R^E(X,Y)U, V>
  double re(const Vec& X, const Vec& Y, const Vec& U, const Vec& V) const {
    double s = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const double xy = X(i) * Y(j);
        if (xy == 0.0) continue;
        for (int be = 0; be < k; ++be)
          for (int al = 0; al < k; ++al) s += xy * V(be) * U(al) * RE(be, al, i, j);
      }
    return s;
  }
  // value on (h1, v1, h2, v2)
  double mixed(const Vec& h1, const Vec& v1, const Vec& h2, const Vec& v2) const {
    return a * E1 * h1.dot(g * h2) * v1.dot(v2) + 0.5 * E2 * re(h1, h2, v1, v2);
  }

  double eval(const SplitVector& X, const SplitVector& Y, const SplitVector& Z,
              const SplitVector& W) const {
    double s = E1 * rm(X.h, Y.h, Z.h, W.h);
    s += E2 * re(X.h, Y.h, Z.v, W.v);
    s += E2 * re(Z.h, W.h, X.v, Y.v);
    s += mixed(X.h, Y.v, Z.h, W.v);   // hvhv
    s += mixed(Y.h, X.v, W.h, Z.v);   // vhvh
    s -= mixed(X.h, Y.v, W.h, Z.v);   // hvvh
    s -= mixed(Y.h, X.v, Z.h, W.v);   // vhhv
    s += -2 * b * E2 * (X.v.dot(W.v) * Y.v.dot(Z.v) - X.v.dot(Z.v) * Y.v.dot(W.v));
    return s;
  }
};

SplitVector basis_vector(int m, int k, int i) {
  SplitVector e = SplitVector::zero(m, k);
  if (i < m) e.h(i) = 1;
  else e.v(i - m) = 1;
  return e;
}

Mat split_metric_at(const PointGeometry& pg) { return pg.metric().split_matrix; }

}  // namespace

double zero_section_curvature(const TotalSpace& space, const Vec& x, const SplitVector& X,
                              const SplitVector& Y, const SplitVector& Z, const SplitVector& W) {
  return ZeroSection(space, x).eval(X, Y, Z, W);
}

Tensor4 zero_section_tensor(const TotalSpace& space, const Vec& x) {
  const ZeroSection zs(space, x);
  const int n = space.dim(), m = zs.m, k = zs.k;
  Tensor4 t(n);
  std::vector<SplitVector> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vector(m, k, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) t(i, j, p, q) = zs.eval(e[i], e[j], e[p], e[q]);
  return t;
}

SplitVector flat_bundle_curvature(const TotalSpace& space, const TotalPoint& p,
                                  const SplitVector& X, const SplitVector& Y,
                                  const SplitVector& Z) {
  if (!space.bundle().is_flat())
    throw InvalidArgument("flat-bundle curvature requested for a bundle with curvature");
  const PointGeometry pg = space.at(p);
  const int m = space.base_dim(), k = space.rank();
  const WeightValues& w = pg.weights();
  const double a1 = w.dphi1, a2 = w.dphi2, b1 = w.d2phi1, b2 = w.d2phi2;
  const double r = p.r();
  const Vec& xi = p.y;
  const Mat& g = pg.base_metric();
  const double e12 = std::exp(2 * (w.phi1 - w.phi2));

  auto wedge_h = [&](const Vec& u, const Vec& v, const Vec& z) -> Vec {
    return u.dot(g * z) * v - v.dot(g * z) * u;
  };
  auto wedge_v = [](const Vec& u, const Vec& v, const Vec& z) -> Vec {
    return u.dot(z) * v - v.dot(z) * u;
  };
  // R(X^h, Y^v) Z^h, vertical
  auto hvh = [&](const Vec& xh, const Vec& yv, const Vec& zh) -> Vec {
    return e12 * xh.dot(g * zh) *
           (4 * (b1 + a1 * a1 - 2 * a1 * a2) * xi.dot(yv) * xi + 2 * (2 * r * a1 * a2 + a1) * yv);
  };
  // R(X^h, Y^v) Z^v, horizontal
  auto hvv = [&](const Vec& xh, const Vec& yv, const Vec& zv) -> Vec {
    return (4 * (2 * a1 * a2 - a1 * a1 - b1) * xi.dot(yv) * xi.dot(zv) -
            2 * (2 * r * a1 * a2 + a1) * yv.dot(zv)) *
           xh;
  };

  SplitVector out = SplitVector::zero(m, k);
  // horizontal-horizontal-horizontal
  const Tensor4 RM = space.base().riemann(p.x);
  Vec low = Vec::Zero(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double xy = X.h(i) * Y.h(j);
      if (xy == 0.0) continue;
      for (int c = 0; c < m; ++c)
        for (int q = 0; q < m; ++q) low(q) += xy * Z.h(c) * RM(i, j, c, q);
    }
  out.h += pg.base_metric_inverse() * low;
  out.h += 4 * r * a1 * a1 * e12 * wedge_h(X.h, Y.h, Z.h);
  // mixed pairs, antisymmetric in the first two slots
  out.v += hvh(X.h, Y.v, Z.h) - hvh(Y.h, X.v, Z.h);
  out.h += hvv(X.h, Y.v, Z.v) - hvv(Y.h, X.v, Z.v);
  // vertical-vertical-vertical
  out.v += 4 * (b2 - a2 * a2) *
               (xi.dot(Z.v) * wedge_v(X.v, Y.v, xi) -
                (X.v.dot(xi) * Y.v.dot(Z.v) - X.v.dot(Z.v) * Y.v.dot(xi)) * xi) +
           4 * (a2 + r * a2 * a2) * wedge_v(X.v, Y.v, Z.v);
  return out;
}

Tensor4 flat_bundle_tensor(const TotalSpace& space, const TotalPoint& p) {
  const int n = space.dim(), m = space.base_dim(), k = space.rank();
  const PointGeometry pg = space.at(p);
  Tensor4 t(n);
  std::vector<SplitVector> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vector(m, k, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < n; ++c) {
        const SplitVector R = flat_bundle_curvature(space, p, e[i], e[j], e[c]);
        for (int q = 0; q < n; ++q) t(i, j, c, q) = pg.inner(R, e[q]);
      }
  return t;
}

FiberCurvatures fiber_curvatures(const WeightProfile& w, int k, const Vec& y) {
  if (k < 2) throw InvalidArgument("fibre sectional curvature needs rank k >= 2");
  if (y.size() != k) throw InvalidArgument("fibre point length differs from k");
  const double r = y.squaredNorm();
  const WeightValues v = w.evaluate(r);
  const double p = v.dphi2, pp = v.d2phi2, e = std::exp(-2 * v.phi2);
  FiberCurvatures out;
  out.sectional = Mat::Zero(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b)
        out.sectional(a, b) =
            4 * e * ((p * p - pp) * (y(a) * y(a) + y(b) * y(b)) - p - r * p * p);
  out.ricci_diagonal.resize(k);
  for (int b = 0; b < k; ++b)
    out.ricci_diagonal(b) = 4 * (p * p - pp) * (r + (k - 2) * y(b) * y(b)) -
                            4 * (k - 1) * (p * p * r + p);
  out.scalar = -4 * e * (k - 1) * (r * p * p * (k - 2) + p * k + 2 * r * pp);
  return out;
}

Mat base_ricci(const BaseChart& base, const Vec& x) {
  const int m = base.dim();
  const Mat ginv = base.metric(x).inverse();
  const Tensor4 R = base.riemann(x);
  Mat ric = Mat::Zero(m, m);
  for (int b = 0; b < m; ++b)
    for (int c = 0; c < m; ++c)
      for (int a = 0; a < m; ++a)
        for (int e = 0; e < m; ++e) ric(b, c) += ginv(a, e) * R(a, b, c, e);
  return ric;
}

Mat ricci_from_tensor(const TotalSpace& space, const Vec& x, const Tensor4& r) {
  const int n = space.dim();
  if (r.dim(0) != n) throw InvalidArgument("tensor dimension differs from the total space");
  const Mat ginv = split_metric_at(space.at({x, Vec::Zero(space.rank())})).inverse();
  Mat ric = Mat::Zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a)
        for (int e = 0; e < n; ++e) ric(b, c) += ginv(a, e) * r(a, b, c, e);
  return ric;
}

CurvatureReport ricci_scalar_zero_section(const TotalSpace& space, const Vec& x) {
  const int m = space.base_dim(), k = space.rank(), n = m + k;
  const PointGeometry pg = space.at({x, Vec::Zero(k)});
  const Mat Gs = split_metric_at(pg);
  const Mat Ginv = Gs.inverse();
  const double E1 = std::exp(2 * pg.weights().phi1), E2 = std::exp(2 * pg.weights().phi2);
  const double a = pg.coeffs().a, b = pg.coeffs().b;

  CurvatureReport rep;
  rep.riemann = zero_section_tensor(space, x);
  rep.ricci = ricci_from_tensor(space, x, rep.riemann);
  rep.scalar = (Ginv * rep.ricci).trace();

  const Mat ricM = base_ricci(space.base(), x);
  rep.ricci_closed_form = Mat::Zero(n, n);
  rep.ricci_closed_form.topLeftCorner(m, m) = ricM - k * a * (E1 / E2) * pg.base_metric();
  rep.ricci_closed_form.bottomRightCorner(k, k) =
      (2 * b * (1 - k) - a * m) * Mat::Identity(k, k);
  const double scalM = (pg.base_metric().inverse() * ricM).trace();
  rep.scalar_closed_form = scalM / E1 - 2 * a * k * m / E2 + 2 * b * k * (1 - k) / E2;

  const double lam = rep.scalar / n;
  const double scale = std::max(1.0, rep.ricci.cwiseAbs().maxCoeff());
  if ((rep.ricci - lam * Gs).cwiseAbs().maxCoeff() <= 1e-8 * scale) rep.einstein_lambda = lam;
  return rep;
}

EinsteinCheck einstein_check(const TotalSpace& space, const Vec& x) {
  const int m = space.base_dim(), k = space.rank();
  const Mat g = space.base().metric(x);
  const Mat ricM = base_ricci(space.base(), x);
  const double lamM = (g.inverse() * ricM).trace() / m;
  const double scale = std::max(1.0, ricM.cwiseAbs().maxCoeff());
  if ((ricM - lamM * g).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw InvalidArgument("base metric is not Einstein at this point");

  const PointGeometry pg = space.at({x, Vec::Zero(k)});
  const WeightValues& w = pg.weights();
  const double a = pg.coeffs().a, b = pg.coeffs().b;
  EinsteinCheck out;
  out.lambda_M = lamM;
  out.residual_first = lamM * std::exp(2 * w.phi2 - 2 * w.phi1) + a * (m - k) + 2 * b * (k - 1);
  const double lamV = (2 * b * (1 - k) - a * m) * std::exp(-2 * w.phi2);
  const double lamH = lamM * std::exp(-2 * w.phi1) - a * k * std::exp(-2 * w.phi2);
  out.residual_second = lamV - lamH;
  if (std::abs(out.residual_first) <= 1e-8 && std::abs(out.residual_second) <= 1e-8)
    out.lambda_E = lamV;
  return out;
}

namespace {

constexpr double kChristoffelStep = 1e-5;
constexpr double kRiemannStep = 2e-3;

void require_oracle_margin(const TotalSpace& space, const TotalPoint& p) {
  space.require_inside(p);
  const double reach = 2.5 * (kRiemannStep + kChristoffelStep);
  const double padx = reach * std::max(1.0, p.x.cwiseAbs().maxCoeff());
  if (!space.base().domain().contains_padded(p.x, padx))
    throw DomainError("finite-difference oracle requested too close to the chart boundary");
  const double pady = reach * std::max(1.0, p.y.size() ? p.y.cwiseAbs().maxCoeff() : 0.0);
  const double rmax = std::pow(p.y.norm() + pady * std::sqrt(double(p.y.size())), 2);
  if (!space.weights().in_domain(rmax))
    throw DomainError("finite-difference oracle requested too close to r_max");
}

}  // namespace

Tensor4 fd_riemann_oracle(const TotalSpace& space, const TotalPoint& p) {
  require_oracle_margin(space, p);
  const MetricFn G = [&space](const Vec& z) { return space.coordinate_metric(z); };
  Tensor4 fine = fd_riemann(G, p.coords(), kChristoffelStep, 0.5 * kRiemannStep);
  Tensor4 coarse = fd_riemann(G, p.coords(), kChristoffelStep, kRiemannStep);
  fine *= 4.0;
  coarse *= -1.0;
  fine += coarse;
  fine *= 1.0 / 3.0;
  return fine;
}

Tensor4 fd_riemann_oracle_split(const TotalSpace& space, const TotalPoint& p) {
  const Tensor4 t = fd_riemann_oracle(space, p);
  const PointGeometry pg = space.at(p);
  // columns: coordinates of the split basis vectors
  return change_basis(t, pg.frame_change().inverse());
}

Tensor4 zero_section_oracle(const TotalSpace& space, const Vec& x, const Vec& direction) {
  if (direction.size() != space.rank() || !(direction.norm() > 0))
    throw InvalidArgument("zero-section oracle needs a nonzero fibre direction");
  const Vec u = direction.normalized();
  auto sym = [&](double d) {
    Tensor4 t = fd_riemann_oracle_split(space, {x, d * u});
    t += fd_riemann_oracle_split(space, {x, -d * u});
    t *= 0.5;
    return t;
  };
  Tensor4 fine = sym(5e-3);
  const Tensor4 coarse = sym(1e-2);
  fine *= 4.0;
  Tensor4 c = coarse;
  c *= -1.0;
  fine += c;
  fine *= 1.0 / 3.0;
  return fine;
}

}  // namespace vbgeo
