#include "vbgeo/holonomy.hpp"

#include "vbgeo/curvature.hpp"
#include "vbgeo/errors.hpp"
#include "vbgeo/four_manifold.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <functional>
#include <cmath>
#include <limits>

namespace vbgeo {

double SkewOperator::skew_residual() const {
  return matrix.size() ? (matrix + matrix.transpose()).cwiseAbs().maxCoeff() : 0.0;
}

double HolonomyResult::margin() const {
  if (largest_discarded <= 0) return std::numeric_limits<double>::infinity();
  return smallest_retained / largest_discarded;
}

std::string classify(int n, int dimension) {
  if (dimension == n * (n - 1) / 2) return "so(" + std::to_string(n) + ")";
  if (n == 7 && dimension == 14) return "g2-dimension";
  if (n == 7 && dimension == 3) return "su(2)-dimension";
  return "dim=" + std::to_string(dimension);
}

namespace {

struct Svd {
  Mat U;
  Eigen::VectorXd sigma;
};

Svd svd_of(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU);
  return {svd.matrixU(), svd.singularValues()};
}

// rank with relative cutoff; sigma sorted decreasingly
SpanInfo rank_info(const Eigen::VectorXd& sigma, double cutoff) {
  SpanInfo info;
  if (sigma.size() == 0 || !(sigma(0) > 0)) return info;
  const double top = sigma(0);
  info.smallest_retained = 1.0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    const double rel = sigma(i) / top;
    if (rel > cutoff) {
      ++info.rank;
      info.smallest_retained = rel;
    } else {
      info.largest_discarded = std::max(info.largest_discarded, rel);
    }
  }
  return info;
}

Mat flatten(const std::vector<Mat>& ops) {
  const Eigen::Index n = ops.front().size();
  Mat a(n, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i)
    a.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const Vec>(ops[i].data(), n);
  return a;
}

Mat unflatten(const Vec& v, int n) { return Eigen::Map<const Mat>(v.data(), n, n); }

// <R^E(E_a, E_c) e_alpha, e_delta> in the Gram-Schmidt frame F
Tensor4 bundle_curvature_on_frame(const Tensor4& RE, const Mat& F, int m, int k) {
  Tensor4 out(k, k, m, m);
  for (int d = 0; d < k; ++d)
    for (int al = 0; al < k; ++al)
      for (int a = 0; a < m; ++a)
        for (int c = 0; c < m; ++c) {
          double s = 0;
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) s += F(i, a) * F(j, c) * RE(d, al, i, j);
          out(d, al, a, c) = s;
        }
  return out;
}

SkewOperator to_weighted_frame(const Mat& T, int m, int k, double phi1, double phi2) {
  Vec s(m + k);
  s.head(m).setConstant(std::exp(-phi1));
  s.tail(k).setConstant(std::exp(-phi2));
  return {s.asDiagonal() * T.transpose() * s.asDiagonal()};
}

void check_skew(const std::vector<CurvatureGenerator>& gens) {
  for (const auto& g : gens) {
    const double scale = std::max(1.0, g.op.matrix.cwiseAbs().maxCoeff());
    if (g.op.skew_residual() > 1e-10 * scale)
      throw NumericalError("curvature generator is not skew");
  }
}

}  // namespace

std::vector<CurvatureGenerator> curvature_generators(const TotalSpace& space, const Vec& x) {
  const int m = space.base_dim(), k = space.rank(), n = m + k;
  const PointGeometry pg = space.at({x, Vec::Zero(k)});
  const double phi1 = pg.weights().phi1, phi2 = pg.weights().phi2;
  const double E1 = std::exp(2 * phi1), E2 = std::exp(2 * phi2);
  const double a = pg.coeffs().a, b = pg.coeffs().b;
  const Mat F = orthonormal_frame(pg.base_metric()).F;
  const Tensor4 Rm = change_basis(space.base().riemann(x), F);
  const Tensor4 Re = bundle_curvature_on_frame(pg.bundle_curvature(), F, m, k);

  std::vector<CurvatureGenerator> out;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      Mat T = Mat::Zero(n, n);
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) T(c, d) = E1 * Rm(p, q, c, d);
      for (int g = 0; g < k; ++g)
        for (int d = 0; d < k; ++d) T(m + g, m + d) = E2 * Re(d, g, p, q);
      out.push_back({to_weighted_frame(T, m, k, phi1, phi2), PlaneType::horizontal, p, q});
    }
  for (int p = 0; p < m; ++p)
    for (int al = 0; al < k; ++al) {
      Mat T = Mat::Zero(n, n);
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < k; ++d) {
          const double B = (c == p && d == al ? a * E1 : 0.0) + 0.5 * E2 * Re(d, al, p, c);
          T(c, m + d) = B;
          T(m + d, c) = -B;
        }
      out.push_back({to_weighted_frame(T, m, k, phi1, phi2), PlaneType::mixed, p, al});
    }
  for (int al = 0; al < k; ++al)
    for (int be = al + 1; be < k; ++be) {
      Mat T = Mat::Zero(n, n);
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) T(c, d) = E2 * Re(be, al, c, d);
      T(m + be, m + al) += -2 * b * E2;
      T(m + al, m + be) += 2 * b * E2;
      out.push_back({to_weighted_frame(T, m, k, phi1, phi2), PlaneType::vertical, al, be});
    }
  check_skew(out);
  return out;
}

std::vector<CurvatureGenerator> curvature_generators_from_tensor(const TotalSpace& space,
                                                                 const Vec& x) {
  const int m = space.base_dim(), k = space.rank(), n = m + k;
  const PointGeometry pg = space.at({x, Vec::Zero(k)});
  Mat B = Mat::Identity(n, n);
  B.topLeftCorner(m, m) = orthonormal_frame(pg.base_metric()).F;
  const Tensor4 R = change_basis(zero_section_tensor(space, x), B);
  auto make = [&](int p, int q, PlaneType t, int f, int s) {
    Mat T(n, n);
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) T(c, d) = R(p, q, c, d);
    return CurvatureGenerator{to_weighted_frame(T, m, k, pg.weights().phi1, pg.weights().phi2),
                              t, f, s};
  };
  std::vector<CurvatureGenerator> out;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) out.push_back(make(p, q, PlaneType::horizontal, p, q));
  for (int p = 0; p < m; ++p)
    for (int al = 0; al < k; ++al) out.push_back(make(p, m + al, PlaneType::mixed, p, al));
  for (int al = 0; al < k; ++al)
    for (int be = al + 1; be < k; ++be)
      out.push_back(make(m + al, m + be, PlaneType::vertical, al, be));
  check_skew(out);
  return out;
}

SpanInfo span_rank(const std::vector<SkewOperator>& ops, double rel_cutoff) {
  if (ops.empty()) return {};
  std::vector<Mat> m;
  for (const auto& o : ops) m.push_back(o.matrix);
  return rank_info(svd_of(flatten(m)).sigma, rel_cutoff);
}

SpanInfo gram_rank(const Mat& gram, double rel_cutoff) {
  if (gram.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  Vec ev = es.eigenvalues().cwiseAbs();
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
  return rank_info(ev, rel_cutoff);
}

HolonomyResult lie_closure(const std::vector<SkewOperator>& generators, double rel_cutoff) {
  if (generators.empty()) throw InvalidArgument("lie closure needs at least one generator");
  const int n = static_cast<int>(generators.front().matrix.rows());
  HolonomyResult res;
  res.n = n;
  res.smallest_retained = 1.0;

  auto absorb = [&](const SpanInfo& info) {
    if (info.rank > 0) res.smallest_retained = std::min(res.smallest_retained, info.smallest_retained);
    res.largest_discarded = std::max(res.largest_discarded, info.largest_discarded);
  };
  auto basis_from = [&](const std::vector<Mat>& cand) {
    const Svd s = svd_of(flatten(cand));
    const SpanInfo info = rank_info(s.sigma, rel_cutoff);
    absorb(info);
    std::vector<Mat> basis;
    for (int i = 0; i < info.rank; ++i) {
      Mat b = unflatten(s.U.col(i), n);
      b = 0.5 * (b - b.transpose());
      basis.push_back(b / b.norm());
    }
    return basis;
  };

  std::vector<Mat> cand;
  for (const auto& g : generators) cand.push_back(g.matrix);
  std::vector<Mat> basis = basis_from(cand);

  const int max_rounds = n * (n - 1) / 2 + 1;
  bool converged = basis.empty();
  while (!converged) {
    if (res.closure_rounds >= max_rounds)
      throw NumericalError("lie closure did not converge within the round limit");
    ++res.closure_rounds;
    const Mat Q = flatten(basis);
    std::vector<Mat> next = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        const Mat c = basis[i] * basis[j] - basis[j] * basis[i];
        Vec v = Eigen::Map<const Vec>(c.data(), c.size());
        v -= Q * (Q.transpose() * v);
        next.push_back(unflatten(v, n));
      }
    std::vector<Mat> grown = basis_from(next);
    converged = grown.size() == basis.size();
    basis = std::move(grown);
  }

  res.dimension = static_cast<int>(basis.size());
  for (auto& b : basis) res.basis.push_back({std::move(b)});
  res.classification = classify(n, res.dimension);
  return res;
}

void require_g2_pairing(const BaseChart& chart, BundleKind kind) {
  const bool ok = (chart.kind() == ChartKind::sphere && kind == BundleKind::lambda2_minus) ||
                  (chart.kind() == ChartKind::hyperbolic && kind == BundleKind::lambda2_plus);
  if (!ok)
    throw InvalidArgument(
        "G2 scenario pairs the sphere with Lambda2_minus and hyperbolic space with Lambda2_plus");
}

G2Report g2_decomposition(const TotalSpace& space, const Vec& x) {
  const BundleKind kind = space.bundle().kind();
  if (space.base_dim() != 4 ||
      (kind != BundleKind::lambda2_plus && kind != BundleKind::lambda2_minus))
    throw InvalidArgument("G2 decomposition needs a Lambda2 bundle over a 4-dimensional base");
  const Orientation own = kind == BundleKind::lambda2_plus ? Orientation::plus : Orientation::minus;
  const Orientation other = own == Orientation::plus ? Orientation::minus : Orientation::plus;

  G2Report rep;
  rep.generators = curvature_generators(space, x);
  std::vector<SkewOperator> all, mixed, vertical;
  std::vector<Mat> hh(16);  // hh[4p+q] for p<q
  for (const auto& g : rep.generators) {
    all.push_back(g.op);
    if (g.type == PlaneType::mixed) mixed.push_back(g.op);
    if (g.type == PlaneType::vertical) vertical.push_back(g.op);
    if (g.type == PlaneType::horizontal) hh[4 * g.first + g.second] = g.op.matrix;
  }
  // R applied to the horizontal lift of a 2-form given as a skew matrix
  auto on_form = [&](const Mat& form) {
    Mat s = Mat::Zero(7, 7);
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) s += form(p, q) * hh[4 * p + q];
    return SkewOperator{s};
  };
  std::vector<SkewOperator> own_type = vertical, other_type;
  for (const Mat& e : lambda2_frame(own)) own_type.push_back(on_form(e));
  for (const Mat& e : lambda2_frame(other)) other_type.push_back(on_form(e));
  rep.subspace_dims = {span_rank(own_type).rank, span_rank(other_type).rank,
                       span_rank(mixed).rank};

  // families: connected components of the mixed generators' Gram matrix
  const int nm = static_cast<int>(mixed.size());
  Mat gram(nm, nm);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) gram(i, j) = (mixed[i].matrix.transpose() * mixed[j].matrix).trace();
  const double tol = 1e-10 * std::max(1e-300, gram.cwiseAbs().maxCoeff());
  std::vector<int> comp(nm, -1);
  int ncomp = 0;
  for (int s = 0; s < nm; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    std::vector<int> members;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v = 0; v < nm; ++v)
        if (comp[v] < 0 && std::abs(gram(u, v)) > tol) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    Mat sub(members.size(), members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j) sub(i, j) = gram(members[i], members[j]);
    rep.family_sizes.push_back(static_cast<int>(members.size()));
    rep.family_gram_ranks.push_back(gram_rank(sub).rank);
    ++ncomp;
  }
  rep.holonomy = lie_closure(all);
  return rep;
}

TotalSpace g2_space(G2Base base, double c0, double c1) {
  if (base == G2Base::sphere4) {
    const BaseChart chart = model_chart(ChartKind::sphere, 4, 1.0);
    return TotalSpace(chart, lambda2_bundle(chart, Orientation::minus),
                      bryant_salamon_profile(c0, c1, 1.0));
  }
  const BaseChart chart = model_chart(ChartKind::hyperbolic, 4, 1.0);
  return TotalSpace(chart, lambda2_bundle(chart, Orientation::plus),
                    bryant_salamon_profile(c0, c1, -1.0));
}

G2Report g2_scenario(G2Base base, double c0, double c1) {
  const TotalSpace space = g2_space(base, c0, c1);
  return g2_decomposition(space, space.base().domain().center());
}

HolonomyResult base_holonomy(const BaseChart& base, const Vec& x) {
  const int m = base.dim();
  const Mat F = orthonormal_frame(base.metric(x)).F;
  const Tensor4 R = change_basis(base.riemann(x), F);
  std::vector<SkewOperator> gens;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      Mat N(m, m);
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) N(c, d) = R(p, q, d, c);
      gens.push_back({N});
    }
  if (gens.empty()) {
    HolonomyResult r;
    r.n = m;
    r.classification = classify(m, 0);
    return r;
  }
  return lie_closure(gens);
}

FlatHolonomyReport flat_holonomy_scenario(const BaseChart& base, int k,
                                          const WeightProfile& profile, const Vec& x) {
  const int m = base.dim(), n = m + k;
  const TotalSpace space(base, trivial_bundle(base, k), profile);
  const WeightValues w = profile.evaluate(0.0);
  FlatHolonomyReport rep;
  rep.holonomy = lie_closure([&] {
    std::vector<SkewOperator> ops;
    for (auto& g : curvature_generators(space, x)) ops.push_back(g.op);
    return ops;
  }());
  rep.base_dimension = base_holonomy(base, x).dimension;
  constexpr double tiny = 1e-14;
  if (std::abs(w.dphi1) > tiny) {
    rep.proposition_case = "i";
    rep.lower_bound = n * (n - 1) / 2;
    rep.expected_equality = true;
  } else if (std::abs(w.dphi2) > tiny) {
    rep.proposition_case = "ii";
    rep.lower_bound = rep.base_dimension + k * (k - 1) / 2;
  } else {
    rep.proposition_case = "iii";
    rep.lower_bound = rep.base_dimension;
    rep.expected_equality = profile.is_constant();
  }
  rep.consistent = rep.holonomy.dimension >= rep.lower_bound &&
                   (!rep.expected_equality || rep.holonomy.dimension == rep.lower_bound);
  return rep;
}

}  // namespace vbgeo
