#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace vbgeo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Dense rank-4 array, row-major in (i,j,k,l).
class Tensor4 {
 public:
  Tensor4() = default;
  Tensor4(int n0, int n1, int n2, int n3)
      : dims_{n0, n1, n2, n3},
        data_(static_cast<std::size_t>(n0) * n1 * n2 * n3, 0.0) {}
  explicit Tensor4(int n) : Tensor4(n, n, n, n) {}

  double& operator()(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return data_[index(i, j, k, l)]; }

  int dim(int axis) const { return dims_[axis]; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double max_abs() const;
  // max |a - b|; shapes must agree
  static double max_abs_diff(const Tensor4& a, const Tensor4& b);

  Tensor4& operator+=(const Tensor4& o);
  Tensor4& operator*=(double s);

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k) * dims_[3] + l;
  }
  std::array<int, 4> dims_{0, 0, 0, 0};
  std::vector<double> data_;
};

// T'(a,b,c,d) = sum T(i,j,k,l) B(i,a) B(j,b) B(k,c) B(l,d): change of basis whose
// new vectors are the columns of B.
Tensor4 change_basis(const Tensor4& t, const Mat& b);

// mt19937_64 with explicit conversions: the standard distributions are
// implementation-defined, which would break bit-stable reports across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform();  // [0,1)
  double uniform(double lo, double hi);
  double normal();
  Vec uniform_vec(int n, double lo, double hi);
  Vec unit_vec(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace vbgeo
