#include <gtest/gtest.h>

#include <vbgeo/errors.hpp>
#include <vbgeo/hermitian.hpp>

#include <cmath>

using namespace vbgeo;

namespace {

TotalSpace tangent_plane(const std::string& phi1, const std::string& phi2) {
  const BaseChart c = model_chart(ChartKind::flat, 2);
  return TotalSpace(c, tangent_bundle(c), expression_profile(phi1, phi2));
}

}  // namespace

TEST(Hermitian, JIsAnOrthogonalComplexStructure) {
  const BaseChart s2 = model_chart(ChartKind::sphere, 2);
  const TotalSpace s(s2, tangent_bundle(s2), expression_profile("0.2*r", "0.5*r - 0.1"));
  const TotalPoint p{Vec::Constant(2, 0.2), Vec::Constant(2, 0.3)};
  const SasakiStructure st = sasaki_structure(s, p);
  EXPECT_LT((st.J * st.J + Mat::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((st.J.transpose() * st.g * st.J - st.g).cwiseAbs().maxCoeff(), 1e-14);
  const Mat w = omega(s, p);
  EXPECT_LT((w + w.transpose()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_GT(std::abs(w.determinant()), 1e-6);
}

TEST(Hermitian, PsiAndPsibar) {
  const TotalSpace s = tangent_plane("0.3", "-0.1");
  const SasakiStructure st = sasaki_structure(s, {Vec::Zero(2), Vec::Constant(2, 0.1)});
  EXPECT_NEAR(st.psi, -0.4, 1e-15);
  EXPECT_NEAR(st.psibar, 0.2, 1e-15);
}

TEST(Hermitian, ClosedOnlyForConstantPsibar) {
  const TotalPoint p{Vec::Constant(2, 0.1), Vec::Constant(2, 0.5)};
  EXPECT_LT(d_omega_norm(tangent_plane("r", "-r"), p), 1e-6);
  EXPECT_GT(d_omega_norm(tangent_plane("0", "r"), p), 1e-2);
}

TEST(Hermitian, NeedsTheTangentBundle) {
  const BaseChart c = model_chart(ChartKind::flat, 2);
  const TotalSpace s(c, trivial_bundle(c, 2), constant_profile(0, 0));
  EXPECT_THROW(sasaki_structure(s, {Vec::Zero(2), Vec::Zero(2)}), InvalidArgument);
}
