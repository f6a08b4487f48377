#pragma once

// Blowup diagnostics: power-law fits in tau = t_star - t, the BKM integral of
// the vorticity sup-norm, and energy scaling on truncated cylinders.

#include <string>
#include <vector>

#include "eulerlab/exact_solutions.hpp"
#include "eulerlab/residuals.hpp"

namespace eulerlab {

struct FitSample {
  double t = 0.0;
  double q = 1.0;
};

struct FitResult {
  double exponent = 0.0;   // slope of log q against log tau
  double prefactor = 0.0;  // q ~ prefactor * tau^exponent
  double rms_log_residual = 0.0;
  int sample_count = 0;
};

// Least squares of log q against log(t_star - t). Needs at least 4 samples.
FitResult fit_blowup_exponent(const std::vector<FitSample>& samples, double t_star);

// Rectangle of the meridional plane sampled on an nr x nz node grid.
struct DiagnosticRegion {
  double r_lo = 0.5, r_hi = 2.0;
  double z_lo = -1.0, z_hi = 1.0;
  int nr = 33, nz = 33;

  void validate() const;
};

// Max over region nodes of the Frobenius norm of the Cartesian gradient
// (exact jets, theta = 0).
double sup_gradient(const SolutionParams& params, double t, const DiagnosticRegion& region);

// Max over region nodes of |omega| from the axisymmetric vorticity (exact jets).
double sup_vorticity(const SolutionParams& params, double t, const DiagnosticRegion& region);

// Closed form |k/a| r^(-2-1/a)/tau maximized over r in [r_lo, r_hi] (Euler family).
double sup_vorticity_closed_form(const SolutionParams& params, double t, double r_lo,
                                 double r_hi);

// Integral over [0, t1] of sup_vorticity. Gauss-Legendre with n nodes in
// s = log(t_star - t), which is exact for sup-norms proportional to 1/tau.
double bkm_integral(const SolutionParams& params, const DiagnosticRegion& region, double t1,
                    int quadrature_n = 16);

struct NamedFit {
  std::string quantity;
  FitResult fit;
  std::vector<FitSample> samples;
};

struct BkmPoint {
  double t1 = 0.0;
  double value = 0.0;
  double log_growth = 0.0;  // sup|omega|(0) * t_star * log(t_star / (t_star - t1))
  double rel_error = 0.0;   // |value / log_growth - 1|
};

struct EnergyPoint {
  double eps = 0.0;
  double R = 0.0;
  double t = 0.0;
  double value = 0.0;
};

struct DiagnosticsOptions {
  DiagnosticRegion region;
  int fit_samples = 8;       // times spread over [0, fit_t_max * t_star]
  double fit_t_max = 0.9;
  double exponent_tol = 0.01;
  std::vector<double> bkm_fractions{0.5, 0.75, 0.875, 0.9375};  // t1 / t_star
  int bkm_nodes = 16;
  double bkm_tol = 0.01;
  double energy_R = 2.0;
  double energy_eps = 0.5;
  double energy_t = 0.5;     // fraction of t_star compared with t = 0
  double energy_tol = 1e-6;  // relative, on the tau^-2 ratio
  std::vector<double> energy_eps_sweep{0.1, 0.01, 0.001};
};

struct DiagnosticsReport {
  std::vector<NamedFit> fits;
  std::vector<BkmPoint> bkm;
  std::vector<EnergyPoint> energy_time;  // (t = 0, t = energy_t * t_star)
  double energy_ratio = 0.0;
  double energy_ratio_expected = 0.0;
  std::vector<EnergyPoint> energy_eps;   // eps sweep at t = 0
  bool energy_monotone = false;
  bool fits_pass = false;
  bool bkm_pass = false;
  bool energy_pass = false;
  bool pass = false;
};

// Euler family only; raises Variant for the viscous relatives.
DiagnosticsReport diagnose(const SolutionParams& params, const DiagnosticsOptions& options = {});

}  // namespace eulerlab
