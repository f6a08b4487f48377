#pragma once

// Particle paths of the meridional flow (vr, vz) and the angular momentum
// r vtheta carried along them.

#include <array>
#include <vector>

#include "eulerlab/exact_solutions.hpp"
#include "eulerlab/flow.hpp"

namespace eulerlab {

struct TrajectorySample {
  double t = 0.0;
  double r = 1.0;
  double z = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;  // strictly increasing t
  SolutionParams params;
  TrajectorySample origin;
};

// r = r0 (tau0/tau)^a, z = z0 (tau/tau0)^(2a).
std::array<double, 2> flow_closed_form(const SolutionParams& params, double t0, double r0,
                                       double z0, double t);

// d r / d r0 and d z / d z0 of the closed-form map.
std::array<double, 2> flow_jacobian(const SolutionParams& params, double t0, double t);

// Closed-form trajectory sampled at n + 1 equally spaced times in [t0, t_end].
Trajectory trace_closed_form(const SolutionParams& params, double t0, double r0, double z0,
                             double t_end, int n);

// Classical RK4 with step dt; the last step is shortened to land on t_end.
// Refuses t_end >= max_fraction * t_star.
Trajectory flow_numeric(const SolutionParams& params, double t0, double r0, double z0,
                        double t_end, double dt, double max_fraction = 0.95);

// r vtheta along the trajectory (Euler family only).
std::vector<double> conserved_swirl(const SolutionParams& params, const Trajectory& traj);
// Same with the swirl of an arbitrary flow, e.g. a perturbed one.
std::vector<double> conserved_swirl(const AxisymmetricFlow& flow, const Trajectory& traj);

// max |v_i - v_0|
double max_drift(const std::vector<double>& values);

}  // namespace eulerlab
