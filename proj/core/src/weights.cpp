#include "vbgeo/weights.hpp"

#include "vbgeo/errors.hpp"
#include "vbgeo/expr.hpp"

#include <cmath>
#include <sstream>

namespace vbgeo {

WeightProfile::WeightProfile(std::string kind, RadialFunction phi1, RadialFunction phi2,
                             double r_max)
    : kind_(std::move(kind)), phi1_(std::move(phi1)), phi2_(std::move(phi2)), r_max_(r_max) {
  if (!(r_max_ > 0)) throw InvalidArgument("r_max must be positive");
  if (!phi1_.f || !phi1_.df || !phi1_.d2f || !phi2_.f || !phi2_.df || !phi2_.d2f)
    throw InvalidArgument("weight profile needs all six evaluators");
}

WeightValues WeightProfile::evaluate(double r) const {
  if (!in_domain(r)) {
    std::ostringstream os;
    os.precision(17);
    os << "r = " << r << " outside the weight domain [0, " << r_max_ << ")";
    throw DomainError(os.str());
  }
  return {phi1_.f(r), phi1_.df(r), phi1_.d2f(r), phi2_.f(r), phi2_.df(r), phi2_.d2f(r)};
}

ConnectionCoefficients coefficients(const WeightValues& v) {
  ConnectionCoefficients c;
  c.a = 2.0 * v.dphi1;
  c.b = 2.0 * v.dphi2;
  c.c2 = -c.b;
  c.c1 = -c.a * std::exp(2.0 * (v.phi1 - v.phi2));
  return c;
}

ConnectionCoefficients coefficients(const WeightProfile& w, double r) {
  return coefficients(w.evaluate(r));
}

namespace {

RadialFunction constant_fn(double c) {
  return {[c](double) { return c; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
}

}  // namespace

WeightProfile constant_profile(double phi1, double phi2) {
  WeightProfile w("constant", constant_fn(phi1), constant_fn(phi2));
  w.mark_constant();
  return w;
}

WeightProfile bryant_salamon_profile(double c0, double c1, double s) {
  if (!(c0 > 0) || !(c1 > 0)) throw InvalidArgument("bryant_salamon needs c0 > 0 and c1 > 0");
  if (!std::isfinite(s)) throw InvalidArgument("bryant_salamon needs finite s");
  const double k = 2.0 * c0 * c0 * s;  // q(r) = k r + c1
  // q > 0 bounds the disk bundle when s < 0
  const double r_max = s < 0 ? -c1 / k : kInfinity;
  const double lc0 = std::log(c0);
  RadialFunction p1{[=](double r) { return 0.25 * std::log(k * r + c1); },
                    [=](double r) { return 0.25 * k / (k * r + c1); },
                    [=](double r) {
                      const double q = k * r + c1;
                      return -0.25 * k * k / (q * q);
                    }};
  RadialFunction p2{[=](double r) { return -0.25 * std::log(k * r + c1) + lc0; },
                    [=](double r) { return -0.25 * k / (k * r + c1); },
                    [=](double r) {
                      const double q = k * r + c1;
                      return 0.25 * k * k / (q * q);
                    }};
  WeightProfile w("bryant_salamon", std::move(p1), std::move(p2), r_max);
  if (s == 0) w.mark_constant();
  return w;
}

WeightProfile kahler_disk_profile(double c1, double kappa) {
  if (!(c1 > 0)) throw InvalidArgument("kahler_disk needs c1 > 0");
  if (!std::isfinite(kappa)) throw InvalidArgument("kahler_disk needs finite kappa");
  const double r_max = kappa < 0 ? -c1 / kappa : kInfinity;
  RadialFunction p1{[=](double r) { return 0.25 * std::log(c1 + kappa * r); },
                    [=](double r) { return 0.25 * kappa / (c1 + kappa * r); },
                    [=](double r) {
                      const double q = c1 + kappa * r;
                      return -0.25 * kappa * kappa / (q * q);
                    }};
  RadialFunction p2{[=](double r) { return -0.25 * std::log(c1 + kappa * r); },
                    [=](double r) { return -0.25 * kappa / (c1 + kappa * r); },
                    [=](double r) {
                      const double q = c1 + kappa * r;
                      return 0.25 * kappa * kappa / (q * q);
                    }};
  WeightProfile w("kahler_disk", std::move(p1), std::move(p2), r_max);
  if (kappa == 0) w.mark_constant();
  return w;
}

namespace {

RadialFunction expression_fn(const std::string& text) {
  const Expr f = Expr::parse(text, {"r"});
  const Expr df = f.derivative(0);
  const Expr d2f = df.derivative(0);
  return {[f](double r) { return f.eval(r); }, [df](double r) { return df.eval(r); },
          [d2f](double r) { return d2f.eval(r); }};
}

}  // namespace

WeightProfile expression_profile(const std::string& phi1, const std::string& phi2,
                                 double r_max) {
  const bool constant = Expr::parse(phi1, {"r"}).is_constant() &&
                        Expr::parse(phi2, {"r"}).is_constant();
  WeightProfile w("custom", expression_fn(phi1), expression_fn(phi2), r_max);
  w.mark_constant(constant);
  return w;
}

WeightProfile callback_profile(RadialFunction phi1, RadialFunction phi2, double r_max) {
  return WeightProfile("custom", std::move(phi1), std::move(phi2), r_max);
}

WeightProfile builtin_profile(ProfileKind kind, const std::map<std::string, double>& params) {
  auto get = [&](const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  switch (kind) {
    case ProfileKind::constant: return constant_profile(get("phi1", 0), get("phi2", 0));
    case ProfileKind::bryant_salamon:
      return bryant_salamon_profile(get("c0", 1), get("c1", 1), get("s", 1));
    case ProfileKind::kahler_disk: return kahler_disk_profile(get("c1", 1), get("kappa", 1));
    case ProfileKind::custom:
      throw InvalidArgument("custom profiles are built from expressions or callbacks");
  }
  throw InvalidArgument("unknown profile kind");
}

DerivativeCheck check_derivatives(const WeightProfile& w, std::span<const double> radii,
                                  double h) {
  DerivativeCheck out;
  auto rel = [](double analytic, double fd) {
    return std::abs(analytic - fd) / std::max(1.0, std::abs(analytic));
  };
  for (double r : radii) {
    if (!w.in_domain(r - h) || !w.in_domain(r + h))
      throw DomainError("derivative check stencil leaves the weight domain");
    const double d1a = (w.phi1(r + h) - w.phi1(r - h)) / (2 * h);
    const double d1b = (w.phi2(r + h) - w.phi2(r - h)) / (2 * h);
    const double d2a = (w.dphi1(r + h) - w.dphi1(r - h)) / (2 * h);
    const double d2b = (w.dphi2(r + h) - w.dphi2(r - h)) / (2 * h);
    out.first = std::max({out.first, rel(w.dphi1(r), d1a), rel(w.dphi2(r), d1b)});
    out.second = std::max({out.second, rel(w.d2phi1(r), d2a), rel(w.d2phi2(r), d2b)});
  }
  return out;
}

}  // namespace vbgeo
