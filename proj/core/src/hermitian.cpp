#include "vbgeo/hermitian.hpp"

#include "vbgeo/errors.hpp"

#include <cmath>

namespace vbgeo {

namespace {

void require_tangent(const TotalSpace& space) {
  if (!space.bundle().is_tangent_bundle())
    throw InvalidArgument("the Sasaki structure needs the tangent bundle");
}

}  // namespace

SasakiStructure sasaki_structure(const TotalSpace& space, const TotalPoint& p) {
  require_tangent(space);
  space.require_inside(p);
  const int m = space.base_dim();
  const WeightValues w = space.weights().evaluate(p.r());
  SasakiStructure s;
  s.psi = w.phi2 - w.phi1;
  s.psibar = w.phi2 + w.phi1;
  s.B = Mat::Zero(2 * m, 2 * m);
  s.B.bottomLeftCorner(m, m).setIdentity();
  s.J = std::exp(-s.psi) * s.B - std::exp(s.psi) * s.B.transpose();
  s.g = Mat::Zero(2 * m, 2 * m);
  s.g.topLeftCorner(m, m) = std::exp(2 * w.phi1) * Mat::Identity(m, m);
  s.g.bottomRightCorner(m, m) = std::exp(2 * w.phi2) * Mat::Identity(m, m);
  return s;
}

Mat sasaki_J(const TotalSpace& space, const TotalPoint& p) { return sasaki_structure(space, p).J; }

Mat omega(const TotalSpace& space, const TotalPoint& p) {
  const SasakiStructure s = sasaki_structure(space, p);
  const int m = space.base_dim();
  const PointGeometry pg = space.at(p);
  // coordinate components -> components in the orthonormal split frame
  Mat T = Mat::Identity(2 * m, 2 * m);
  T.topLeftCorner(m, m) = orthonormal_frame(pg.base_metric()).L.transpose();
  T = T * pg.frame_change();
  const Mat w_split = s.J.transpose() * s.g;
  return T.transpose() * w_split * T;
}

double d_omega_norm(const TotalSpace& space, const TotalPoint& p, double h) {
  require_tangent(space);
  if (!(h > 0)) throw InvalidArgument("finite-difference step must be positive");
  const int m = space.base_dim(), n = 2 * m;
  const Vec z = p.coords();
  std::vector<Mat> dw(n);
  for (int c = 0; c < n; ++c) {
    Vec zp = z, zm = z;
    zp(c) += h;
    zm(c) -= h;
    const TotalPoint a = TotalPoint::from_coords(zp, m), b = TotalPoint::from_coords(zm, m);
    if (!space.contains(a) || !space.contains(b))
      throw DomainError("d omega requested too close to the domain boundary");
    dw[c] = (omega(space, a) - omega(space, b)) / (2 * h);
  }
  double out = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        out = std::max(out, std::abs(dw[a](b, c) + dw[b](c, a) + dw[c](a, b)));
  return out;
}

}  // namespace vbgeo
