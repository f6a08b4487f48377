#pragma once

// Manufactured-solution solver on an annular (r, z) grid: the stream-function
// Poisson problem, velocity recovery, and semi-Lagrangian swirl transport.

#include <string>
#include <vector>

#include "eulerlab/exact_solutions.hpp"

namespace eulerlab {

struct AnnulusGrid {
  double r_lo = 0.5, r_hi = 2.0;
  double z_lo = -1.0, z_hi = 1.0;
  int nr = 65, nz = 65;

  void validate() const;
  double hr() const { return (r_hi - r_lo) / (nr - 1); }
  double hz() const { return (z_hi - z_lo) / (nz - 1); }
  double r(int i) const { return i == nr - 1 ? r_hi : r_lo + i * hr(); }
  double z(int j) const { return j == nz - 1 ? z_hi : z_lo + j * hz(); }
  bool on_boundary(int i, int j) const { return i == 0 || j == 0 || i == nr - 1 || j == nz - 1; }
  std::size_t size() const { return static_cast<std::size_t>(nr) * nz; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * nz + j; }
};

struct GridField {
  AnnulusGrid grid;
  std::vector<double> values;  // index(i, j)
  double time = 0.0;

  GridField() = default;
  GridField(const AnnulusGrid& g, double t);
  double& at(int i, int j) { return values[grid.index(i, j)]; }
  double at(int i, int j) const { return values[grid.index(i, j)]; }

  template <class F>
  static GridField sample(const AnnulusGrid& g, double t, const F& f) {
    GridField out(g, t);
    for (int i = 0; i < g.nr; ++i) {
      for (int j = 0; j < g.nz; ++j) out.at(i, j) = f(g.r(i), g.z(j));
    }
    return out;
  }
};

enum class SwirlComponent { VTheta, Psi, VR, VZ };
// Exact field of the Euler family on the grid.
GridField exact_field(const SolutionParams& params, const AnnulusGrid& grid, double t,
                      SwirlComponent which);

// ---------------------------------------------------------------------------
// Elliptic problem -(d_rr + (1/r) d_r + d_zz - 1/r^2) psi = omega

struct EllipticOptions {
  double tol = 1e-10;  // relative residual of the Jacobi-scaled system
  int max_iter = 0;    // 0 means 10 * nr * nz
};

struct StreamSolve {
  GridField psi;
  int iterations = 0;
  double residual = 0.0;                // final relative residual
  std::vector<double> residual_history;  // one entry per iteration, starting with iteration 0
};

// Dirichlet data are taken from the boundary nodes of `bc`. The initial guess
// is `bc` itself (interior values included), so a previous solution can warm
// start the iteration.
StreamSolve solve_stream(const GridField& omega, const GridField& bc,
                         const EllipticOptions& options = {});

// Applies the 5-point operator -(d_rr + (1/r) d_r + d_zz - 1/r^2) at interior
// nodes (boundary entries are zero).
GridField apply_stream_operator(const GridField& psi);

struct MeridionalVelocity {
  GridField vr;
  GridField vz;
};

// vr = -d_z psi, vz = (1/r) d_r(r psi); central differences inside, one-sided
// second order on the boundary.
MeridionalVelocity velocities_from_stream(const GridField& psi);

// (1/r) D_r(r vr) + D_z vz at interior nodes with central differences.
GridField discrete_divergence(const MeridionalVelocity& v);

// ---------------------------------------------------------------------------
// Swirl transport

enum class VelocitySource { ExactMeridional, FromStream };
enum class Interpolation { Bilinear, Biquadratic, Bicubic };
enum class Backtrace { Midpoint, ExactFlowMap };

const char* to_string(VelocitySource v) noexcept;
const char* to_string(Interpolation v) noexcept;
const char* to_string(Backtrace v) noexcept;

struct SimConfig {
  double cfl = 0.5;
  double t_end = 0.5;
  Interpolation interpolation = Interpolation::Biquadratic;
  Backtrace backtrace = Backtrace::Midpoint;
  VelocitySource velocity = VelocitySource::ExactMeridional;
  EllipticOptions elliptic;
  int snapshots = 1;                 // equally spaced snapshot times after t = 0
  double max_fraction = 0.9;         // t_end must not exceed this fraction of t_star
  double min_dt = 1e-8;

  void validate(double t_star) const;
};

struct StepStats {
  int feet_outside = 0;  // interior nodes whose foot left the domain
};

// One semi-Lagrangian step of size dt from vtheta.time.
GridField advect_step(const SolutionParams& params, const GridField& vtheta, double dt,
                      const SimConfig& config, StepStats* stats = nullptr);

struct AdvectionRun {
  std::vector<GridField> snapshots;  // includes the initial field
  int steps = 0;
  int feet_outside = 0;
  double min_dt = 0.0;
  double max_dt = 0.0;
};

AdvectionRun advect_swirl(const SolutionParams& params, const GridField& vtheta0,
                          const SimConfig& config);

// ---------------------------------------------------------------------------
// Errors against the exact swirl

struct SnapshotError {
  double time = 0.0;
  double linf = 0.0;
  double l2 = 0.0;        // root mean square over nodes
  double rel_linf = 0.0;  // linf / max |exact|
};

struct ErrorReport {
  std::vector<SnapshotError> rows;
  double amplification = 0.0;  // last / first nonzero linf (0 if none)
};

ErrorReport error_report(const std::vector<GridField>& numeric, const SolutionParams& params);

// log(e_coarse / e_fine) / log(h_coarse / h_fine)
double observed_order(double e_coarse, double e_fine, double h_coarse, double h_fine);

}  // namespace eulerlab
