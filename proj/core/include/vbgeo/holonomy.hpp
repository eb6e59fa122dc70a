#pragma once

#include "vbgeo/bundle.hpp"
#include "vbgeo/chart.hpp"
#include "vbgeo/total_space.hpp"

#include <array>
#include <string>
#include <vector>

namespace vbgeo {

struct SkewOperator {
  Mat matrix;
  double skew_residual() const;  // max |M + M^T|
};

enum class PlaneType { horizontal, mixed, vertical };

// R_o(u, w) for a pair of orthonormal split-frame directions (indices into the
// horizontal Gram-Schmidt frame or the fibre frame), as an endomorphism in the
// g_{M,E}-orthonormal frame at o.
struct CurvatureGenerator {
  SkewOperator op;
  PlaneType type;
  int first;
  int second;
};

// Block formulas for the three kinds of operators at o = (x, 0).
std::vector<CurvatureGenerator> curvature_generators(const TotalSpace& space, const Vec& x);
// The same operators read from zero_section_tensor; used as an independent check.
std::vector<CurvatureGenerator> curvature_generators_from_tensor(const TotalSpace& space,
                                                                 const Vec& x);

struct SpanInfo {
  int rank = 0;
  double smallest_retained = 0;  // relative to the largest singular value
  double largest_discarded = 0;
};
SpanInfo span_rank(const std::vector<SkewOperator>& ops, double rel_cutoff = 1e-8);
SpanInfo gram_rank(const Mat& gram, double rel_cutoff = 1e-8);

struct HolonomyResult {
  int n = 0;
  int dimension = 0;
  std::vector<SkewOperator> basis;
  int closure_rounds = 0;
  std::string classification;
  double smallest_retained = 0;
  double largest_discarded = 0;
  // smallest_retained / largest_discarded (infinite when nothing was discarded)
  double margin() const;
};

std::string classify(int n, int dimension);

// Ambrose-Singer closure under the trace inner product tr(A^T B).
HolonomyResult lie_closure(const std::vector<SkewOperator>& generators,
                           double rel_cutoff = 1e-8);

enum class G2Base { sphere4, hyperbolic4 };

struct G2Report {
  HolonomyResult holonomy;
  std::array<int, 3> subspace_dims{};  // e_k-type with vertical pairs, e_kbar-type, mixed
  std::vector<int> family_sizes;
  std::vector<int> family_gram_ranks;
  std::vector<CurvatureGenerator> generators;
};

// Decomposition used in the G2 proof, for a Lambda^2 bundle over a 4-dimensional base.
G2Report g2_decomposition(const TotalSpace& space, const Vec& x);
// S^4 with Lambda^2_- (s = 1) or H^4 with Lambda^2_+ (s = -1), Bryant-Salamon weights.
TotalSpace g2_space(G2Base base, double c0, double c1);
G2Report g2_scenario(G2Base base, double c0, double c1);
// Throws InvalidArgument unless the pairing is sphere/minus or hyperbolic/plus.
void require_g2_pairing(const BaseChart& chart, BundleKind kind);

struct FlatHolonomyReport {
  HolonomyResult holonomy;
  int base_dimension = 0;  // local holonomy of the base at x
  int lower_bound = 0;
  std::string proposition_case;  // "i", "ii" or "iii"
  bool expected_equality = false;
  bool consistent = false;
};

FlatHolonomyReport flat_holonomy_scenario(const BaseChart& base, int k,
                                          const WeightProfile& profile, const Vec& x);

// Local holonomy of a chart at x from its curvature operators.
HolonomyResult base_holonomy(const BaseChart& base, const Vec& x);

}  // namespace vbgeo
