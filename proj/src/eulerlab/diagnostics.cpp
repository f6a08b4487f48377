#include "eulerlab/diagnostics.hpp"

#include <gsl/gsl_fit.h>

#include <algorithm>
#include <cmath>

#include "eulerlab/calculus.hpp"
#include "eulerlab/quadrature.hpp"

namespace eulerlab {

FitResult fit_blowup_exponent(const std::vector<FitSample>& samples, double t_star) {
  if (samples.size() < 4) fail(ErrorKind::Param, "a fit needs at least 4 samples");
  if (!(t_star > 0.0) || !std::isfinite(t_star)) fail(ErrorKind::Param, "t_star must be positive");
  std::vector<double> x, y;
  for (const auto& s : samples) {
    if (!std::isfinite(s.t) || !(s.t < t_star)) fail(ErrorKind::Domain, "fit sample at or past t_star");
    if (!(s.q > 0.0) || !std::isfinite(s.q)) fail(ErrorKind::Domain, "fit quantity must be positive");
    x.push_back(std::log(t_star - s.t));
    y.push_back(std::log(s.q));
  }
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*lo == *hi) fail(ErrorKind::DegenerateFit, "all samples share one tau");

  double c0, c1, cov00, cov01, cov11, sumsq;
  gsl_fit_linear(x.data(), 1, y.data(), 1, x.size(), &c0, &c1, &cov00, &cov01, &cov11, &sumsq);
  FitResult out;
  out.exponent = c1;
  out.prefactor = std::exp(c0);
  out.rms_log_residual = std::sqrt(sumsq / static_cast<double>(x.size()));
  out.sample_count = static_cast<int>(x.size());
  return out;
}

void DiagnosticRegion::validate() const {
  if (!(r_lo > 0.0)) fail(ErrorKind::Domain, "region r_lo must be positive");
  if (!(r_hi > r_lo) || !(z_hi > z_lo)) fail(ErrorKind::Domain, "region extents are empty");
  if (nr < 2 || nz < 2) fail(ErrorKind::Param, "region needs at least 2 nodes per direction");
}

namespace {

template <class F>
double region_max(const DiagnosticRegion& region, const F& f) {
  region.validate();
  double m = 0.0;
  for (int i = 0; i < region.nr; ++i) {
    const double r = region.r_lo + (region.r_hi - region.r_lo) * i / (region.nr - 1);
    for (int j = 0; j < region.nz; ++j) {
      const double z = region.z_lo + (region.z_hi - region.z_lo) * j / (region.nz - 1);
      m = std::max(m, f(r, z));
    }
  }
  return m;
}

void check_time(const SolutionParams& params, double t) {
  if (!std::isfinite(t) || !(t < params.t_star)) fail(ErrorKind::Domain, "t must be below t_star");
}

}  // namespace

double sup_gradient(const SolutionParams& params, double t, const DiagnosticRegion& region) {
  params.validate();
  check_time(params, t);
  return region_max(region, [&](double r, double z) {
    const Tensor3 g = gradient_exact(params, CartPoint{t, r, 0.0, z});
    double s = 0.0;
    for (const auto& row : g) {
      for (double v : row) s += v * v;
    }
    return std::sqrt(s);
  });
}

double sup_vorticity(const SolutionParams& params, double t, const DiagnosticRegion& region) {
  params.validate();
  check_time(params, t);
  return region_max(region, [&](double r, double z) {
    const auto vars = seed<3>({t, r, z});
    const auto v = velocity_cyl(params, vars[cyl::T], vars[cyl::R], vars[cyl::Z]);
    const VorticityVector w = vorticity_axisym(v.vr, v.vtheta, v.vz, r);
    return std::sqrt(w.omega_r * w.omega_r + w.omega_theta * w.omega_theta +
                     w.omega_z * w.omega_z);
  });
}

double sup_vorticity_closed_form(const SolutionParams& params, double t, double r_lo,
                                 double r_hi) {
  params.validate();
  check_time(params, t);
  if (params.variant != Variant::EulerSelfSimilar) {
    fail(ErrorKind::Variant, "closed-form vorticity sup is for the Euler family");
  }
  if (!(r_lo > 0.0) || !(r_hi >= r_lo)) fail(ErrorKind::Domain, "invalid radial range");
  const double e = -2.0 - 1.0 / params.a;
  const double c = std::abs(params.k / params.a) / (params.t_star - t);
  return c * std::max(std::pow(r_lo, e), std::pow(r_hi, e));
}

double bkm_integral(const SolutionParams& params, const DiagnosticRegion& region, double t1,
                    int quadrature_n) {
  params.validate();
  region.validate();
  if (!std::isfinite(t1) || t1 < 0.0 || !(t1 < params.t_star)) {
    fail(ErrorKind::Domain, "t1 must lie in [0, t_star)");
  }
  if (quadrature_n < 1) fail(ErrorKind::Param, "quadrature needs at least one node");
  if (t1 == 0.0) return 0.0;
  // t = t_star - exp(s), dt = -exp(s) ds
  const GaussLegendre rule(quadrature_n);
  return rule.integrate(
      [&](double s) {
        const double tau = std::exp(s);
        return sup_vorticity(params, params.t_star - tau, region) * tau;
      },
      std::log(params.t_star - t1), std::log(params.t_star));
}

DiagnosticsReport diagnose(const SolutionParams& params, const DiagnosticsOptions& options) {
  params.validate();
  options.region.validate();
  if (params.variant != Variant::EulerSelfSimilar) {
    fail(ErrorKind::Variant, "blowup diagnostics apply to the Euler family");
  }
  if (options.fit_samples < 4) fail(ErrorKind::Param, "a fit needs at least 4 samples");
  if (!(options.fit_t_max > 0.0 && options.fit_t_max < 1.0)) {
    fail(ErrorKind::Param, "fit_t_max must lie in (0, 1)");
  }
  const double T = params.t_star;
  const DiagnosticRegion& region = options.region;
  DiagnosticsReport rep;

  auto add_fit = [&](const std::string& name, auto quantity) {
    NamedFit f;
    f.quantity = name;
    for (int n = 0; n < options.fit_samples; ++n) {
      const double t = options.fit_t_max * T * n / (options.fit_samples - 1);
      f.samples.push_back({t, quantity(t)});
    }
    f.fit = fit_blowup_exponent(f.samples, T);
    rep.fits.push_back(std::move(f));
  };
  add_fit("sup_grad_v", [&](double t) { return sup_gradient(params, t, region); });
  add_fit("sup_vorticity", [&](double t) { return sup_vorticity(params, t, region); });
  add_fit("abs_dv3_dx3", [&](double t) {
    return std::abs(gradient_exact(params, CartPoint{t, 1.0, 0.0, 0.0})[2][2]);
  });
  rep.fits_pass = std::all_of(rep.fits.begin(), rep.fits.end(), [&](const NamedFit& f) {
    return std::abs(f.fit.exponent + 1.0) <= options.exponent_tol;
  });

  const double w0 = sup_vorticity(params, 0.0, region);
  rep.bkm_pass = true;
  for (double frac : options.bkm_fractions) {
    BkmPoint b;
    b.t1 = frac * T;
    b.value = bkm_integral(params, region, b.t1, options.bkm_nodes);
    b.log_growth = w0 * T * std::log(T / (T - b.t1));
    b.rel_error = b.log_growth > 0.0 ? std::abs(b.value / b.log_growth - 1.0) : 0.0;
    rep.bkm_pass = rep.bkm_pass && b.rel_error <= options.bkm_tol;
    rep.bkm.push_back(b);
  }

  EnergyRegion er;
  er.eps = options.energy_eps;
  er.R = options.energy_R;
  const double t_mid = options.energy_t * T;
  rep.energy_time.push_back({er.eps, er.R, 0.0, energy_ball(params, 0.0, er)});
  rep.energy_time.push_back({er.eps, er.R, t_mid, energy_ball(params, t_mid, er)});
  rep.energy_ratio = rep.energy_time[1].value / rep.energy_time[0].value;
  rep.energy_ratio_expected = std::pow(T / (T - t_mid), 2.0);
  for (double eps : options.energy_eps_sweep) {
    EnergyRegion e = er;
    e.eps = eps;
    rep.energy_eps.push_back({eps, e.R, 0.0, energy_ball(params, 0.0, e)});
  }
  rep.energy_monotone = rep.energy_eps.size() >= 2;
  for (std::size_t n = 1; n < rep.energy_eps.size(); ++n) {
    // eps sweep is ordered by decreasing eps
    rep.energy_monotone = rep.energy_monotone && rep.energy_eps[n].value > rep.energy_eps[n - 1].value;
  }
  const bool ratio_ok =
      std::abs(rep.energy_ratio - rep.energy_ratio_expected) <= options.energy_tol * rep.energy_ratio_expected;
  rep.energy_pass = ratio_ok && (params.a > 0.0 ? rep.energy_monotone : true);
  rep.pass = rep.fits_pass && rep.bkm_pass && rep.energy_pass;
  return rep;
}

}  // namespace eulerlab
