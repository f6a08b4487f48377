#include "eulerlab/characteristics.hpp"

#include <algorithm>
#include <cmath>

namespace eulerlab {

namespace {

void check_start(const SolutionParams& params, double t0, double r0, double z0) {
  params.validate();
  if (!std::isfinite(t0) || t0 < 0.0 || !(t0 < params.t_star)) {
    fail(ErrorKind::Domain, "t0 must lie in [0, t_star)");
  }
  if (!(r0 > 0.0) || !std::isfinite(r0)) fail(ErrorKind::Domain, "r0 must be positive");
  if (!std::isfinite(z0)) fail(ErrorKind::Domain, "z0 must be finite");
}

std::array<double, 2> meridional(const SolutionParams& p, double t, double r, double z) {
  const double tau = p.t_star - t;
  return {p.a * r / tau, -2.0 * p.a * z / tau};
}

}  // namespace

std::array<double, 2> flow_closed_form(const SolutionParams& params, double t0, double r0,
                                       double z0, double t) {
  check_start(params, t0, r0, z0);
  if (!std::isfinite(t) || t < t0 || !(t < params.t_star)) {
    fail(ErrorKind::Domain, "t must lie in [t0, t_star)");
  }
  const double ratio = (params.t_star - t0) / (params.t_star - t);  // tau0 / tau
  return {r0 * std::pow(ratio, params.a), z0 * std::pow(ratio, -2.0 * params.a)};
}

std::array<double, 2> flow_jacobian(const SolutionParams& params, double t0, double t) {
  const auto rz = flow_closed_form(params, t0, 1.0, 1.0, t);
  return rz;  // the map is linear in r0 and in z0
}

Trajectory trace_closed_form(const SolutionParams& params, double t0, double r0, double z0,
                             double t_end, int n) {
  check_start(params, t0, r0, z0);
  if (n < 1) fail(ErrorKind::Param, "need at least one interval");
  if (!(t_end > t0) || !(t_end < params.t_star)) {
    fail(ErrorKind::Domain, "t_end must lie in (t0, t_star)");
  }
  Trajectory traj;
  traj.params = params;
  traj.origin = {t0, r0, z0};
  for (int i = 0; i <= n; ++i) {
    const double t = i == n ? t_end : t0 + (t_end - t0) * i / n;
    const auto rz = flow_closed_form(params, t0, r0, z0, t);
    traj.samples.push_back({t, rz[0], rz[1]});
  }
  return traj;
}

Trajectory flow_numeric(const SolutionParams& params, double t0, double r0, double z0,
                        double t_end, double dt, double max_fraction) {
  check_start(params, t0, r0, z0);
  if (!(dt > 0.0) || !std::isfinite(dt)) fail(ErrorKind::Param, "dt must be positive");
  if (!(max_fraction > 0.0) || max_fraction > 1.0) {
    fail(ErrorKind::Param, "max_fraction must lie in (0, 1]");
  }
  if (!(t_end >= t0)) fail(ErrorKind::Domain, "t_end must not precede t0");
  if (!(t_end < max_fraction * params.t_star)) {
    fail(ErrorKind::Step, "t_end too close to t_star (limit " +
                              std::to_string(max_fraction) + " t_star)");
  }
  Trajectory traj;
  traj.params = params;
  traj.origin = {t0, r0, z0};
  traj.samples.push_back(traj.origin);

  double t = t0, r = r0, z = z0;
  const long steps = static_cast<long>(std::ceil((t_end - t0) / dt * (1.0 - 1e-12)));
  for (long s = 0; s < steps; ++s) {
    const double h = s + 1 == steps ? t_end - t : dt;
    if (!(t + h < params.t_star)) fail(ErrorKind::Step, "step would cross t_star");
    const auto k1 = meridional(params, t, r, z);
    const auto k2 = meridional(params, t + h / 2, r + h / 2 * k1[0], z + h / 2 * k1[1]);
    const auto k3 = meridional(params, t + h / 2, r + h / 2 * k2[0], z + h / 2 * k2[1]);
    const auto k4 = meridional(params, t + h, r + h * k3[0], z + h * k3[1]);
    r += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
    z += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
    t = s + 1 == steps ? t_end : t + h;
    if (!(r > 0.0)) fail(ErrorKind::Step, "step drove r to a non-positive value");
    traj.samples.push_back({t, r, z});
  }
  return traj;
}

std::vector<double> conserved_swirl(const AxisymmetricFlow& flow, const Trajectory& traj) {
  std::vector<double> out;
  out.reserve(traj.samples.size());
  for (const auto& s : traj.samples) out.push_back(s.r * flow.cyl(CylArgs{s.t, s.r, s.z}).vtheta);
  return out;
}

std::vector<double> conserved_swirl(const SolutionParams& params, const Trajectory& traj) {
  if (params.variant != Variant::EulerSelfSimilar) {
    fail(ErrorKind::Variant, "r vtheta is conserved only for the Euler family");
  }
  return conserved_swirl(ExactFlow(params), traj);
}

double max_drift(const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v - values.front()));
  return m;
}

}  // namespace eulerlab
