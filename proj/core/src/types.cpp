#include "vbgeo/types.hpp"

#include <cmath>
#include <stdexcept>

namespace vbgeo {

double Tensor4::max_abs() const {
  double m = 0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Tensor4::max_abs_diff(const Tensor4& a, const Tensor4& b) {
  if (a.dims_ != b.dims_) throw std::invalid_argument("Tensor4 shape mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    m = std::max(m, std::abs(a.data_[i] - b.data_[i]));
  return m;
}

Tensor4& Tensor4::operator+=(const Tensor4& o) {
  if (dims_ != o.dims_) throw std::invalid_argument("Tensor4 shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor4& Tensor4::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Tensor4 change_basis(const Tensor4& t, const Mat& b) {
  const int n = t.dim(0);
  const int p = static_cast<int>(b.cols());
  // contract one index at a time: O(n^4 p) instead of O(n^4 p^4)
  Tensor4 t1(p, n, n, n), t2(p, p, n, n), t3(p, p, p, n), out(p);
  for (int a = 0; a < p; ++a)
    for (int i = 0; i < n; ++i) {
      const double w = b(i, a);
      if (w == 0.0) continue;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) t1(a, j, k, l) += w * t(i, j, k, l);
    }
  for (int a = 0; a < p; ++a)
    for (int c = 0; c < p; ++c)
      for (int j = 0; j < n; ++j) {
        const double w = b(j, c);
        if (w == 0.0) continue;
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) t2(a, c, k, l) += w * t1(a, j, k, l);
      }
  for (int a = 0; a < p; ++a)
    for (int c = 0; c < p; ++c)
      for (int d = 0; d < p; ++d)
        for (int k = 0; k < n; ++k) {
          const double w = b(k, d);
          if (w == 0.0) continue;
          for (int l = 0; l < n; ++l) t3(a, c, d, l) += w * t2(a, c, k, l);
        }
  for (int a = 0; a < p; ++a)
    for (int c = 0; c < p; ++c)
      for (int d = 0; d < p; ++d)
        for (int e = 0; e < p; ++e) {
          double s = 0;
          for (int l = 0; l < n; ++l) s += b(l, e) * t3(a, c, d, l);
          out(a, c, d, e) = s;
        }
  return out;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  // Box-Muller; 1 - u keeps the log argument in (0, 1]
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Vec Rng::uniform_vec(int n, double lo, double hi) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
  return v;
}

Vec Rng::unit_vec(int n) {
  Vec v(n);
  do {
    for (int i = 0; i < n; ++i) v(i) = normal();
  } while (v.norm() < 1e-12);
  return v.normalized();
}

}  // namespace vbgeo
