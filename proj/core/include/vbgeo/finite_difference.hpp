#pragma once

#include "vbgeo/types.hpp"

#include <functional>
#include <vector>

namespace vbgeo {

using MetricFn = std::function<Mat(const Vec&)>;

// [c](a,b) = d_c g_ab by central differences.
std::vector<Mat> fd_metric_derivative(const MetricFn& g, const Vec& x, double h);

// [a](b,c) = Gamma^a_{bc} from a metric and its first derivatives.
std::vector<Mat> christoffel_from_derivative(const Mat& g, const std::vector<Mat>& dg);

// Lowered Riemann tensor R(i,j,k,l) = g(R(d_i,d_j)d_k, d_l), with
// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z, from the
// Christoffel symbols and their derivatives dgamma[c][a](b,d) = d_c Gamma^a_{bd}.
Tensor4 riemann_from_christoffel(const Mat& g, const std::vector<Mat>& gamma,
                                 const std::vector<std::vector<Mat>>& dgamma);

// Christoffels by central differences of g (step h_christoffel), Riemann by central
// differences of those Christoffels (step h_riemann). Steps scale with max(1, |x_c|).
Tensor4 fd_riemann(const MetricFn& g, const Vec& x, double h_christoffel, double h_riemann);

// max residual of the four algebraic symmetries and the first Bianchi identity
double riemann_symmetry_residual(const Tensor4& r);

}  // namespace vbgeo
