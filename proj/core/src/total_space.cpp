#include "vbgeo/total_space.hpp"

#include "vbgeo/errors.hpp"

#include <cmath>
#include <sstream>

namespace vbgeo {

Vec TotalPoint::coords() const {
  Vec z(x.size() + y.size());
  z << x, y;
  return z;
}

TotalPoint TotalPoint::from_coords(const Vec& z, int m) {
  return {z.head(m), z.tail(z.size() - m)};
}

Vec SplitVector::stacked() const {
  Vec s(h.size() + v.size());
  s << h, v;
  return s;
}

SplitVector SplitVector::from_stacked(const Vec& s, int m) {
  return {s.head(m), s.tail(s.size() - m)};
}

double SplitVector::max_abs() const {
  double a = h.size() ? h.cwiseAbs().maxCoeff() : 0.0;
  if (v.size()) a = std::max(a, v.cwiseAbs().maxCoeff());
  return a;
}

VectorField VectorField::split(const SplitVector& value, Mat jacobian) {
  return {Frame::split, value.stacked(), std::move(jacobian)};
}

VectorField VectorField::coordinate(Vec value, Mat jacobian) {
  return {Frame::coordinate, std::move(value), std::move(jacobian)};
}

VectorField VectorField::tautological(int m, int k, const Vec& y) {
  Mat j = Mat::Zero(m + k, m + k);
  j.bottomRightCorner(k, k).setIdentity();
  return split({Vec::Zero(m), y}, j);
}

RadialDeformation RadialDeformation::identity() {
  return {"identity", [](double t) { return t; }};
}

RadialDeformation RadialDeformation::sinh() {
  return {"sinh", [](double t) { return std::sinh(t); }};
}

RadialDeformation RadialDeformation::cubic() {
  return {"cubic", [](double t) { return t + t * t * t / 6.0; }};
}

void RadialDeformation::validate() const {
  if (!f) throw InvalidArgument("radial deformation has no function");
  if (std::abs(f(0.0)) > 1e-14) throw InvalidArgument("radial deformation needs f(0) = 0");
  const double h = 1e-6;
  if (std::abs((f(h) - f(-h)) / (2 * h) - 1.0) > 1e-6)
    throw InvalidArgument("radial deformation needs f'(0) = 1");
  for (double t : {0.1, 0.5, 1.0, 2.0})
    if (std::abs(f(t) + f(-t)) > 1e-12 * std::max(1.0, std::abs(f(t))))
      throw InvalidArgument("radial deformation must be odd");
}

TotalSpace::TotalSpace(BaseChart base, BundleConnection bundle, WeightProfile weights)
    : base_(std::move(base)),
      bundle_(std::move(bundle)),
      weights_(std::move(weights)),
      m_(base_.dim()),
      k_(bundle_.rank()) {
  if (bundle_.base().dim() != m_)
    throw InvalidArgument("bundle and base chart dimensions differ");
  const WeightValues v = weights_.evaluate(0.0);
  for (double d : {v.phi1, v.dphi1, v.d2phi1, v.phi2, v.dphi2, v.d2phi2})
    if (!std::isfinite(d))
      throw InvalidArgument("weights and their first two derivatives must be finite at r = 0");
}

bool TotalSpace::contains(const TotalPoint& p) const {
  return p.x.size() == m_ && p.y.size() == k_ && base_.domain().contains(p.x) &&
         weights_.in_domain(p.r());
}

void TotalSpace::require_inside(const TotalPoint& p) const {
  if (p.y.size() != k_)
    throw InvalidArgument("fibre point has length " + std::to_string(p.y.size()) +
                          ", bundle rank is " + std::to_string(k_));
  base_.require_inside(p.x);
  if (!weights_.in_domain(p.r())) {
    std::ostringstream os;
    os.precision(17);
    os << "fibre point with r = " << p.r() << " outside [0, " << weights_.r_max() << ")";
    throw DomainError(os.str());
  }
}

PointGeometry TotalSpace::at(const TotalPoint& p) const { return PointGeometry(*this, p); }

namespace {

Mat frame_change_matrix(const std::vector<Mat>& gamE, const Vec& y, int m, int k) {
  Mat P = Mat::Identity(m + k, m + k);
  for (int i = 0; i < m; ++i) P.block(m, i, k, 1) = gamE[i].transpose() * y;
  return P;
}

Mat split_metric(const Mat& g, const WeightValues& w, int m, int k) {
  Mat S = Mat::Zero(m + k, m + k);
  S.topLeftCorner(m, m) = std::exp(2 * w.phi1) * g;
  S.bottomRightCorner(k, k) = std::exp(2 * w.phi2) * Mat::Identity(k, k);
  return S;
}

}  // namespace

Mat TotalSpace::coordinate_metric(const Vec& z) const {
  const TotalPoint p = TotalPoint::from_coords(z, m_);
  const WeightValues w = weights_.evaluate(p.r());
  const Mat P = frame_change_matrix(bundle_.gamma(p.x), p.y, m_, k_);
  return P.transpose() * split_metric(base_.metric(p.x), w, m_, k_) * P;
}

PointGeometry::PointGeometry(const TotalSpace& space, const TotalPoint& p)
    : space_(&space), p_(p), m_(space.base_dim()), k_(space.rank()) {
  space.require_inside(p);
  w_ = space.weights().evaluate(p.r());
  c_ = coefficients(w_);
  g_ = space.base().metric(p.x);
  ginv_ = g_.inverse();
  gam_ = space.base().christoffel(p.x);
  gamE_ = space.bundle().gamma(p.x);
  RE_ = space.bundle().curvature(p.x);
  P_ = frame_change_matrix(gamE_, p.y, m_, k_);
}

SplitVector PointGeometry::split(const Vec& coord) const {
  return SplitVector::from_stacked(P_ * coord, m_);
}

Vec PointGeometry::unsplit(const SplitVector& s) const {
  Vec c(m_ + k_);
  c << s.h, s.v - P_.bottomLeftCorner(k_, m_) * s.h;
  return c;
}

SplitVector PointGeometry::xi() const { return {Vec::Zero(m_), p_.y}; }

MetricAtPoint PointGeometry::metric() const {
  MetricAtPoint out;
  out.split_matrix = split_metric(g_, w_, m_, k_);
  out.matrix = P_.transpose() * out.split_matrix * P_;
  return out;
}

double PointGeometry::inner_M(const SplitVector& a, const SplitVector& b) const {
  return a.h.dot(g_ * b.h);
}

double PointGeometry::inner_E(const SplitVector& a, const SplitVector& b) const {
  return a.v.dot(b.v);
}

double PointGeometry::inner(const SplitVector& a, const SplitVector& b) const {
  return std::exp(2 * w_.phi1) * inner_M(a, b) + std::exp(2 * w_.phi2) * inner_E(a, b);
}

Vec PointGeometry::bundle_curvature_apply(const Vec& xh, const Vec& yh, const Vec& u) const {
  Vec out = Vec::Zero(k_);
  for (int i = 0; i < m_; ++i) {
    if (xh(i) == 0.0) continue;
    for (int j = 0; j < m_; ++j) {
      const double w = xh(i) * yh(j);
      if (w == 0.0) continue;
      for (int b = 0; b < k_; ++b)
        for (int a = 0; a < k_; ++a) out(b) += RE_(b, a, i, j) * w * u(a);
    }
  }
  return out;
}

SplitVector PointGeometry::tensor_C(const SplitVector& X, const SplitVector& Y) const {
  const Vec& y = p_.y;
  const double xx = y.dot(X.v), xy = y.dot(Y.v);
  SplitVector out;
  out.h = c_.a * (xx * Y.h + xy * X.h);
  out.v = (c_.c1 * inner_M(X, Y) + c_.c2 * inner_E(X, Y)) * y + c_.b * (xx * Y.v + xy * X.v);
  return out;
}

SplitVector PointGeometry::calR(const SplitVector& X, const SplitVector& Y) const {
  return {Vec::Zero(m_), bundle_curvature_apply(X.h, Y.h, p_.y)};
}

SplitVector PointGeometry::tensor_A(const SplitVector& X, const SplitVector& Y) const {
  // e^{2phi1} <A(X,Y), d_j>_M = e^{2phi2}/2 (<R^E(X,d_j)y, Y^v> + <R^E(Y,d_j)y, X^v>)
  Vec w = Vec::Zero(m_);
  for (int j = 0; j < m_; ++j) {
    Vec ej = Vec::Zero(m_);
    ej(j) = 1;
    w(j) = bundle_curvature_apply(X.h, ej, p_.y).dot(Y.v) +
           bundle_curvature_apply(Y.h, ej, p_.y).dot(X.v);
  }
  return {0.5 * std::exp(2 * (w_.phi2 - w_.phi1)) * (ginv_ * w), Vec::Zero(k_)};
}

SplitVector PointGeometry::split_field_value(const VectorField& Y) const {
  if (Y.value.size() != m_ + k_) throw InvalidArgument("vector field has wrong length");
  if (Y.frame == VectorField::Frame::split) return SplitVector::from_stacked(Y.value, m_);
  return split(Y.value);
}

Mat PointGeometry::split_field_jacobian(const VectorField& Y) const {
  if (Y.jacobian.rows() != m_ + k_ || Y.jacobian.cols() != m_ + k_)
    throw InvalidArgument("vector field Jacobian has wrong shape");
  if (Y.frame == VectorField::Frame::split) return Y.jacobian;
  // d(P Y)/dz^c = (dP/dz^c) Y + P dY/dz^c; only the K block of P depends on z
  Mat J = P_ * Y.jacobian;
  const Vec yh = Y.value.head(m_);
  const auto dgam = space_->bundle().gamma_derivative(p_.x);
  for (int c = 0; c < m_; ++c) {
    Vec col = Vec::Zero(k_);
    for (int i = 0; i < m_; ++i) col += yh(i) * (dgam[c][i].transpose() * p_.y);
    J.block(m_, c, k_, 1) += col;
  }
  for (int g = 0; g < k_; ++g) {
    Vec col = Vec::Zero(k_);
    for (int i = 0; i < m_; ++i) col += yh(i) * gamE_[i].row(g).transpose();
    J.block(m_, m_ + g, k_, 1) += col;
  }
  return J;
}

SplitVector PointGeometry::directional_derivative(const SplitVector& X,
                                                  const VectorField& Y) const {
  return SplitVector::from_stacked(split_field_jacobian(Y) * unsplit(X), m_);
}

SplitVector PointGeometry::d_tilde(const SplitVector& X, const VectorField& Yf) const {
  const SplitVector Y = split_field_value(Yf);
  SplitVector out = directional_derivative(X, Yf);
  for (int i = 0; i < m_; ++i) {
    if (X.h(i) == 0.0) continue;
    for (int q = 0; q < m_; ++q) out.h(q) += X.h(i) * gam_[q].row(i).dot(Y.h);
    out.v += X.h(i) * (gamE_[i].transpose() * Y.v);
  }
  const SplitVector C = tensor_C(X, Y);
  return out + C;
}

SplitVector PointGeometry::levi_civita(const SplitVector& X, const VectorField& Yf) const {
  const SplitVector Y = split_field_value(Yf);
  const Vec& y = p_.y;
  const Vec& B = Y.v;
  const double e = std::exp(2 * (w_.phi2 - w_.phi1));
  const double yB = y.dot(B), yX = y.dot(X.v);

  SplitVector out = directional_derivative(X, Yf);

  // horizontal components
  Vec rh = Vec::Zero(m_);  // lowered curvature terms, raised with g^{-1} below
  for (int j = 0; j < m_; ++j) {
    Vec ej = Vec::Zero(m_);
    ej(j) = 1;
    rh(j) = bundle_curvature_apply(X.h, ej, y).dot(B) + bundle_curvature_apply(Y.h, ej, y).dot(X.v);
  }
  for (int i = 0; i < m_; ++i)
    for (int q = 0; q < m_; ++q) out.h(q) += X.h(i) * gam_[q].row(i).dot(Y.h);
  out.h += c_.a * yB * X.h + c_.a * yX * Y.h + 0.5 * e * (ginv_ * rh);

  // vertical components
  for (int i = 0; i < m_; ++i) out.v += X.h(i) * (gamE_[i].transpose() * B);
  out.v += c_.c1 * Y.h.dot(g_ * X.h) * y;
  out.v -= 0.5 * bundle_curvature_apply(X.h, Y.h, y);
  out.v += c_.c2 * X.v.dot(B) * y + c_.b * yX * B + c_.b * yB * X.v;
  return out;
}

double PointGeometry::killing_residual(const VectorField& X, const SplitVector& Y,
                                       const SplitVector& Z) const {
  return inner(levi_civita(Y, X), Z) + inner(Y, levi_civita(Z, X));
}

Vec PointGeometry::xi_flat_coordinates() const {
  Vec s = Vec::Zero(m_ + k_);
  s.tail(k_) = p_.y;
  return P_.transpose() * s;
}

MetricAtPoint PointGeometry::musso_tricerri(double f3) const {
  // eigenvalue along xi is e^{2phi2} + f3 r
  if (!(std::exp(2 * w_.phi2) + f3 * p_.r() > 0))
    throw DomainError("Musso-Tricerri metric is not positive definite at this point");
  MetricAtPoint out = metric();
  const Vec xc = xi_flat_coordinates();
  out.matrix += f3 * xc * xc.transpose();
  Vec s = Vec::Zero(m_ + k_);
  s.tail(k_) = p_.y;
  out.split_matrix += f3 * s * s.transpose();
  return out;
}

MetricAtPoint PointGeometry::bergery_metric(const RadialDeformation& f) const {
  f.validate();
  const double r = p_.r();
  const double e2 = std::exp(2 * w_.phi2);
  Mat fibre;
  if (r < 1e-12) {
    fibre = e2 * Mat::Identity(k_, k_);  // f^2/r -> f'(0)^2 = 1
  } else {
    const double t = std::sqrt(r);
    const double ft = f.f(t);
    if (!(ft > 0)) throw InvalidArgument("radial deformation must be positive for t > 0");
    const double q = ft * ft / r;
    const Mat yy = p_.y * p_.y.transpose() / r;
    fibre = e2 * (q * (Mat::Identity(k_, k_) - yy) + yy);
  }
  MetricAtPoint out;
  out.split_matrix = Mat::Zero(m_ + k_, m_ + k_);
  out.split_matrix.topLeftCorner(m_, m_) = std::exp(2 * w_.phi1) * g_;
  out.split_matrix.bottomRightCorner(k_, k_) = fibre;
  out.matrix = P_.transpose() * out.split_matrix * P_;
  return out;
}

double PointGeometry::conformal_check(const RadialDeformation& f) const {
  const double r = p_.r();
  if (!(r > 0)) throw DomainError("conformal check needs r > 0");
  f.validate();
  const double ft = f.f(std::sqrt(r));
  const double q = ft * ft;
  const MetricAtPoint lhs = bergery_metric(f);
  const MetricAtPoint mt = musso_tricerri(std::exp(2 * w_.phi2) * (1.0 / q - 1.0 / r));
  Mat H = Mat::Zero(m_ + k_, m_ + k_);
  H.topLeftCorner(m_, m_) = std::exp(2 * w_.phi1) * g_;
  H = P_.transpose() * H * P_;
  // horizontal weight of the comparison metric is (r/f^2) e^{2phi1}
  const Mat rhs = (q / r) * (mt.matrix + (r / q - 1.0) * H);
  return (lhs.matrix - rhs).cwiseAbs().maxCoeff();
}

}  // namespace vbgeo
