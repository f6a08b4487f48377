#pragma once

// Pointwise residuals (left-hand side minus right-hand side) of the
// axisymmetric Euler system, the Cartesian momentum balance, the viscous
// swirl equation and the pressure Poisson equation, plus seeded sampling.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "eulerlab/calculus.hpp"
#include "eulerlab/exact_solutions.hpp"
#include "eulerlab/flow.hpp"

namespace eulerlab {

enum class EquationId {
  SwirlTransport,
  VorticityTransport,
  StreamPoisson,
  BiotSavart,
  Incompressibility,
  CartesianMomentum,
  NSSwirlMomentum,
  PressurePoisson,
};

const char* to_string(EquationId id) noexcept;
EquationId parse_equation_id(const std::string& text);

std::vector<EquationId> euler_equations();      // SwirlTransport .. CartesianMomentum
std::vector<EquationId> ns_equations();         // Incompressibility, NSSwirlMomentum, CartesianMomentum
std::vector<EquationId> applicable_equations(const AxisymmetricFlow& flow);

struct SamplePoint {
  double t = 0.0;
  double r = 1.0;
  double z = 0.0;
  double theta = 0.0;  // azimuth used for the Cartesian equations
};

struct ResidualValue {
  std::array<double, 3> components{};
  int size = 1;
  double largest_term = 0.0;  // largest magnitude among the summed terms

  double max_abs() const;
};

ResidualValue residual_at(const AxisymmetricFlow& flow, EquationId eq, const SamplePoint& pt,
                          const DiffConfig& diff = {});
ResidualValue residual_at(const SolutionParams& params, EquationId eq, const SamplePoint& pt,
                          const DiffConfig& diff = {});

// -Lap P - sum_ij (d_j v_i)(d_i v_j) with the flow's pressure.
double pressure_poisson_check(const AxisymmetricFlow& flow, const SamplePoint& pt,
                              const DiffConfig& diff = {});
double pressure_poisson_check(const SolutionParams& params, const SamplePoint& pt,
                              const DiffConfig& diff = {});

struct SamplingSpec {
  double r_lo = 0.5, r_hi = 2.0;
  double z_lo = -1.0, z_hi = 1.0;
  double t_hi = 0.8;  // absolute time
  int count = 1000;
  std::uint64_t seed = 1;

  static SamplingSpec standard(double t_star, int count = 1000, std::uint64_t seed = 1);
  void validate(double t_star) const;
  std::vector<SamplePoint> draw() const;
};

struct EquationResult {
  EquationId equation = EquationId::SwirlTransport;
  double max_abs_residual = 0.0;
  SamplePoint argmax;
  double largest_term = 0.0;
  int samples = 0;
  bool pass = true;
};

struct ResidualReport {
  std::string flow;
  SolutionParams params;
  SamplingSpec sampling;
  double tol = 1e-10;
  DiffConfig diff;
  std::vector<EquationResult> equations;
  bool pass = true;

  const EquationResult& find(EquationId id) const;
  std::string to_json() const;  // deterministic, no timestamps
};

ResidualReport verify(const AxisymmetricFlow& flow, const std::vector<EquationId>& eqs,
                      const SamplingSpec& sampling, double tol, const DiffConfig& diff = {});
ResidualReport verify(const SolutionParams& params, const std::vector<EquationId>& eqs,
                      const SamplingSpec& sampling, double tol, const DiffConfig& diff = {});

// Energy of the velocity over {eps <= r <= R, |z| <= R} by Gauss-Legendre
// quadrature in r (geometrically graded panels) and z, times 2 pi.
struct EnergyRegion {
  double eps = 0.5;
  double R = 2.0;
  int order = 16;   // nodes per panel
  int panels = 0;   // radial panels; 0 picks one per factor of 2 in R/eps
};
double energy_ball(const SolutionParams& params, double t, const EnergyRegion& region);

}  // namespace eulerlab
