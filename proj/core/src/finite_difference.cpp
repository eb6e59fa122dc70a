#include "vbgeo/finite_difference.hpp"

#include <cmath>

namespace vbgeo {

namespace {

double step_at(double h, double xc) { return h * std::max(1.0, std::abs(xc)); }

}  // namespace

std::vector<Mat> fd_metric_derivative(const MetricFn& g, const Vec& x, double h) {
  const int n = static_cast<int>(x.size());
  std::vector<Mat> dg(n);
  for (int c = 0; c < n; ++c) {
    const double hc = step_at(h, x(c));
    Vec xp = x, xm = x;
    xp(c) += hc;
    xm(c) -= hc;
    dg[c] = (g(xp) - g(xm)) / (2 * hc);
  }
  return dg;
}

std::vector<Mat> christoffel_from_derivative(const Mat& g, const std::vector<Mat>& dg) {
  const int n = static_cast<int>(g.rows());
  const Mat gi = g.inverse();
  // lowered: first(l, b, c) = (d_b g_lc + d_c g_lb - d_l g_bc) / 2
  std::vector<Mat> first(n, Mat::Zero(n, n));
  for (int l = 0; l < n; ++l)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        first[l](b, c) = 0.5 * (dg[b](l, c) + dg[c](l, b) - dg[l](b, c));
  std::vector<Mat> gamma(n, Mat::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int l = 0; l < n; ++l) {
      const double w = gi(a, l);
      if (w != 0.0) gamma[a] += w * first[l];
    }
  return gamma;
}

Tensor4 riemann_from_christoffel(const Mat& g, const std::vector<Mat>& gamma,
                                 const std::vector<std::vector<Mat>>& dgamma) {
  const int n = static_cast<int>(g.rows());
  // (R(d_c,d_d) d_b)^a = d_c G^a_db - d_d G^a_cb + G^a_ce G^e_db - G^a_de G^e_cb
  Tensor4 up(n);  // up(c,d,b,a)
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
          double v = dgamma[c][a](d, b) - dgamma[d][a](c, b);
          for (int e = 0; e < n; ++e)
            v += gamma[a](c, e) * gamma[e](d, b) - gamma[a](d, e) * gamma[e](c, b);
          up(c, d, b, a) = v;
        }
  Tensor4 low(n);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      for (int b = 0; b < n; ++b)
        for (int l = 0; l < n; ++l) {
          double v = 0;
          for (int a = 0; a < n; ++a) v += g(a, l) * up(c, d, b, a);
          low(c, d, b, l) = v;
        }
  return low;
}

Tensor4 fd_riemann(const MetricFn& g, const Vec& x, double h_christoffel, double h_riemann) {
  const int n = static_cast<int>(x.size());
  auto christoffel = [&](const Vec& p) {
    return christoffel_from_derivative(g(p), fd_metric_derivative(g, p, h_christoffel));
  };
  std::vector<std::vector<Mat>> dgamma(n);
  for (int c = 0; c < n; ++c) {
    const double hc = step_at(h_riemann, x(c));
    Vec xp = x, xm = x;
    xp(c) += hc;
    xm(c) -= hc;
    const auto gp = christoffel(xp);
    const auto gm = christoffel(xm);
    dgamma[c].resize(n);
    for (int a = 0; a < n; ++a) dgamma[c][a] = (gp[a] - gm[a]) / (2 * hc);
  }
  return riemann_from_christoffel(g(x), christoffel(x), dgamma);
}

double riemann_symmetry_residual(const Tensor4& r) {
  const int n = r.dim(0);
  double res = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = r(i, j, k, l);
          res = std::max(res, std::abs(v + r(j, i, k, l)));
          res = std::max(res, std::abs(v + r(i, j, l, k)));
          res = std::max(res, std::abs(v - r(k, l, i, j)));
          res = std::max(res, std::abs(v + r(j, k, i, l) + r(k, i, j, l)));
        }
  return res;
}

}  // namespace vbgeo
