#include "eulerlab/exact_solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eulerlab/calculus.hpp"
#include "eulerlab/rng.hpp"

namespace eulerlab {

const char* to_string(Variant v) noexcept {
  switch (v) {
    case Variant::EulerSelfSimilar: return "euler-selfsimilar";
    case Variant::NSInverseR: return "ns-inverse-r";
    case Variant::NSDecayingSwirl: return "ns-decaying-swirl";
  }
  return "?";
}

Variant parse_variant(const std::string& text) {
  if (text == "euler-selfsimilar" || text == "EulerSelfSimilar" || text == "euler") {
    return Variant::EulerSelfSimilar;
  }
  if (text == "ns-inverse-r" || text == "NSInverseR") return Variant::NSInverseR;
  if (text == "ns-decaying-swirl" || text == "NSDecayingSwirl") return Variant::NSDecayingSwirl;
  fail(ErrorKind::Config, "unknown variant '" + text +
                              "' (expected euler-selfsimilar, ns-inverse-r or ns-decaying-swirl)");
}

void SolutionParams::validate() const {
  if (!std::isfinite(a) || a == 0.0) fail(ErrorKind::Param, "a must be nonzero");
  if (!std::isfinite(k) || k == 0.0) fail(ErrorKind::Param, "k must be nonzero");
  if (!std::isfinite(t_star) || !(t_star > 0.0)) fail(ErrorKind::Param, "t_star must be positive");
  if (!std::isfinite(nu) || nu < 0.0) fail(ErrorKind::Param, "nu must be non-negative");
}

namespace {

void validate_time(const SolutionParams& params, double t) {
  if (!std::isfinite(t) || t < 0.0 || !(t < params.t_star)) {
    fail(ErrorKind::Domain, "t must lie in [0, t_star)");
  }
}

}  // namespace

void validate_point(const SolutionParams& params, const CylPoint& pt) {
  params.validate();
  validate_time(params, pt.t);
  if (!(pt.r > 0.0) || !std::isfinite(pt.r)) fail(ErrorKind::Domain, "r must be positive");
  if (!std::isfinite(pt.z)) fail(ErrorKind::Domain, "z must be finite");
}

void validate_point(const SolutionParams& params, const CartPoint& pt) {
  params.validate();
  validate_time(params, pt.t);
  const double rr = pt.x1 * pt.x1 + pt.x2 * pt.x2;
  if (!(rr > 0.0) || !std::isfinite(rr)) fail(ErrorKind::Domain, "x1^2 + x2^2 must be positive");
  if (!std::isfinite(pt.x3)) fail(ErrorKind::Domain, "x3 must be finite");
}

VelocityCyl eval_cyl(const SolutionParams& params, const CylPoint& pt) {
  validate_point(params, pt);
  return velocity_cyl(params, pt.t, pt.r, pt.z);
}

VelocityCart eval_cart(const SolutionParams& params, const CartPoint& pt) {
  validate_point(params, pt);
  return velocity_cart(params, pt.t, pt.x1, pt.x2, pt.x3);
}

StreamVorticity stream_and_vorticity(const SolutionParams& params, const CylPoint& pt) {
  validate_point(params, pt);
  if (params.variant != Variant::EulerSelfSimilar) {
    fail(ErrorKind::Variant, "stream function is only available for the Euler family");
  }
  return {stream_function(params, pt.t, pt.r, pt.z), 0.0};
}

double pressure(const SolutionParams& params, const CylPoint& pt) {
  validate_point(params, pt);
  return pressure_cyl(params, pt.t, pt.r, pt.z);
}

Tensor3 gradient_paper(const SolutionParams& params, const CartPoint& pt) {
  validate_point(params, pt);
  if (params.variant != Variant::EulerSelfSimilar) {
    fail(ErrorKind::Variant, "printed gradient formulas exist only for the Euler family");
  }
  const double a = params.a;
  const double k = params.k;
  const double tau = params.t_star - pt.t;
  const double x1 = pt.x1, x2 = pt.x2, x3 = pt.x3;
  const double rr = x1 * x1 + x2 * x2;
  const double m = 2.0 + 1.0 / a;
  const double r4 = std::pow(rr, (4.0 + 1.0 / a) / 2.0);  // r^{4+1/a}

  Tensor3 g{};
  g[0][0] = a / tau - k * m * x1 * x2 / (2.0 * r4 * tau);
  g[0][1] = k * (rr - m * x2 * x2) / (r4 * tau);
  g[0][2] = k * x2 * x3 * m / (r4 * tau);
  g[1][0] = -k * (rr - m * x1 * x1) / (r4 * tau);
  g[1][1] = a / tau + k * m * x1 * x2 / (2.0 * r4 * tau);
  g[1][2] = -k * x2 * x3 * m / (r4 * tau);
  g[2][0] = 0.0;
  g[2][1] = 0.0;
  g[2][2] = -2.0 * a / tau;
  return g;
}

Tensor3 gradient_exact(const SolutionParams& params, const CartPoint& pt) {
  validate_point(params, pt);
  const auto x = seed<4>({pt.t, pt.x1, pt.x2, pt.x3});
  const auto v = velocity_cart(params, x[0], x[1], x[2], x[3]);
  Tensor3 g{};
  for (int i = 0; i < 3; ++i) {
    const auto grad = cart_gradient(v[i]);
    for (int j = 0; j < 3; ++j) g[i][j] = grad[j];
  }
  return g;
}

CylBasis cylindrical_basis(double x1, double x2) {
  const double r = std::hypot(x1, x2);
  if (!(r > 0.0)) fail(ErrorKind::Domain, "basis undefined on the axis");
  return {{x1 / r, x2 / r, 0.0}, {x2 / r, -x1 / r, 0.0}, {0.0, 0.0, 1.0}};
}

std::array<double, 3> to_cartesian(const VelocityCyl& v, double x1, double x2) {
  const CylBasis b = cylindrical_basis(x1, x2);
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = v.vr * b.e_r[i] + v.vtheta * b.e_theta[i] + v.vz * b.e_z[i];
  }
  return out;
}

GradientCrossCheck cross_check_gradient(const SolutionParams& params, int samples,
                                        std::uint64_t seed_value, double rel_tol) {
  params.validate();
  if (samples <= 0) fail(ErrorKind::Param, "sample count must be positive");
  GradientCrossCheck out;
  out.samples = samples;
  out.entries.resize(9);
  for (int i = 0; i < 9; ++i) {
    out.entries[i].row = i / 3;
    out.entries[i].col = i % 3;
  }
  Rng rng(seed_value);
  for (int s = 0; s < samples; ++s) {
    const double t = rng.uniform(0.0, 0.8 * params.t_star);
    const double r = rng.uniform(0.5, 2.0);
    const double z = rng.uniform(-1.0, 1.0);
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const CartPoint pt{t, r * std::cos(theta), r * std::sin(theta), z};
    const Tensor3 printed = gradient_paper(params, pt);
    const Tensor3 exact = gradient_exact(params, pt);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        auto& e = out.entries[i * 3 + j];
        const double diff = std::abs(printed[i][j] - exact[i][j]);
        e.max_abs_diff = std::max(e.max_abs_diff, diff);
        if (diff > rel_tol * std::max(1.0, std::abs(exact[i][j]))) e.mismatch = true;
        if (i == 2) out.third_row_max_diff = std::max(out.third_row_max_diff, diff);
      }
    }
  }
  for (const auto& e : out.entries) {
    if (e.mismatch) out.mismatched.push_back({e.row, e.col});
  }
  return out;
}

}  // namespace eulerlab
