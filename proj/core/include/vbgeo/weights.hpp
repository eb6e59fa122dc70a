#pragma once

#include <functional>
#include <limits>
#include <map>
#include <span>
#include <string>

namespace vbgeo {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// A function of r with its first two derivatives.
struct RadialFunction {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> d2f;
};

struct WeightValues {
  double phi1 = 0, dphi1 = 0, d2phi1 = 0;
  double phi2 = 0, dphi2 = 0, d2phi2 = 0;
};

struct ConnectionCoefficients {
  double a = 0, b = 0, c1 = 0, c2 = 0;
};

// Radial weights phi1, phi2 of r = |y|^2 on [0, r_max).
class WeightProfile {
 public:
  WeightProfile(std::string kind, RadialFunction phi1, RadialFunction phi2,
                double r_max = kInfinity);

  const std::string& kind() const { return kind_; }
  double r_max() const { return r_max_; }
  bool in_domain(double r) const { return r >= 0.0 && r < r_max_; }
  // true when both weights were built as constants (derivatives vanish identically)
  bool is_constant() const { return constant_; }

  double phi1(double r) const { return phi1_.f(r); }
  double dphi1(double r) const { return phi1_.df(r); }
  double d2phi1(double r) const { return phi1_.d2f(r); }
  double phi2(double r) const { return phi2_.f(r); }
  double dphi2(double r) const { return phi2_.df(r); }
  double d2phi2(double r) const { return phi2_.d2f(r); }

  // Throws DomainError outside [0, r_max).
  WeightValues evaluate(double r) const;

  WeightProfile& mark_constant(bool c = true) {
    constant_ = c;
    return *this;
  }

 private:
  std::string kind_;
  RadialFunction phi1_, phi2_;
  double r_max_;
  bool constant_ = false;
};

ConnectionCoefficients coefficients(const WeightProfile& w, double r);
ConnectionCoefficients coefficients(const WeightValues& v);

enum class ProfileKind { constant, bryant_salamon, kahler_disk, custom };

WeightProfile constant_profile(double phi1, double phi2);
// phi1 = log(2 c0^2 s r + c1)/4, phi2 = -phi1 + log c0
WeightProfile bryant_salamon_profile(double c0, double c1, double s);
// e^{2 phi1} = sqrt(c1 + kappa r), e^{2 phi2} = 1/sqrt(c1 + kappa r)
WeightProfile kahler_disk_profile(double c1, double kappa);
// phi1, phi2 as expressions in the variable `r`; derivatives are symbolic.
WeightProfile expression_profile(const std::string& phi1, const std::string& phi2,
                                 double r_max = kInfinity);
WeightProfile callback_profile(RadialFunction phi1, RadialFunction phi2,
                               double r_max = kInfinity);

// Numeric kinds read from params: constant{phi1,phi2}, bryant_salamon{c0,c1,s},
// kahler_disk{c1,kappa}. Missing keys fall back to defaults 0 / 1 as documented.
WeightProfile builtin_profile(ProfileKind kind, const std::map<std::string, double>& params);

struct DerivativeCheck {
  double first = 0;   // max relative error of dphi vs central difference of phi
  double second = 0;  // max relative error of d2phi vs central difference of dphi
};

// Compares analytic derivatives with central differences at the given radii.
// Relative error is |analytic - fd| / max(1, |analytic|).
DerivativeCheck check_derivatives(const WeightProfile& w, std::span<const double> radii,
                                  double h = 1e-5);

}  // namespace vbgeo
