#pragma once

#include "vbgeo/total_space.hpp"

namespace vbgeo {

// Generalised Sasaki structure on TM, psi = phi2 - phi1, psibar = phi2 + phi1.
// Matrices are in the split frame built on the Gram-Schmidt frame of TM (horizontal
// lifts E_i^h, vertical lifts E_i^v), where g_{M,E} = diag(e^{2phi1} I, e^{2phi2} I).
struct SasakiStructure {
  double psi = 0;
  double psibar = 0;
  Mat B;  // B(Z^h) = Z^v, B(Z^v) = 0
  Mat J;  // e^{-psi} B - e^{psi} B^t
  Mat g;  // the metric in this frame
};

SasakiStructure sasaki_structure(const TotalSpace& space, const TotalPoint& p);
Mat sasaki_J(const TotalSpace& space, const TotalPoint& p);
// omega(X, Y) = g(JX, Y) in the coordinate frame (x, y)
Mat omega(const TotalSpace& space, const TotalPoint& p);
// max over coordinate triples of |d omega| by central differences
double d_omega_norm(const TotalSpace& space, const TotalPoint& p, double h = 1e-4);

}  // namespace vbgeo
