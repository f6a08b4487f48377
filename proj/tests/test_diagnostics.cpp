#include <doctest.h>

#include <cmath>
#include <functional>

#include "eulerlab/diagnostics.hpp"
#include "eulerlab/error.hpp"
#include "eulerlab/rng.hpp"
#include "oracle.hpp"

using namespace eulerlab;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Domain;
}

}  // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("fit of |d v3 / d x3| = 2a / tau") {
  std::vector<FitSample> s;
  for (double t : {0.0, 0.3, 0.6, 0.8}) s.push_back({t, 2.0 / (1.0 - t)});
  const auto f = fit_blowup_exponent(s, 1.0);
  CHECK(std::abs(f.exponent + 1.0) <= 1e-12);
  CHECK(f.prefactor == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f.rms_log_residual <= 1e-12);
  CHECK(f.sample_count == 4);
}

TEST_CASE("constant quantity has exponent zero") {
  std::vector<FitSample> s;
  for (double t : {0.0, 0.2, 0.4, 0.6, 0.8}) s.push_back({t, 3.5});
  const auto f = fit_blowup_exponent(s, 1.0);
  CHECK(std::abs(f.exponent) <= 1e-12);
  CHECK(f.prefactor == doctest::Approx(3.5));
}

TEST_CASE("synthetic power laws are recovered") {
  Rng rng(17);
  for (int n = 0; n < 50; ++n) {
    const double C = rng.uniform(0.1, 10.0), e = rng.uniform(-3.0, 3.0), T = rng.uniform(0.5, 4.0);
    std::vector<FitSample> s;
    for (int i = 0; i < 8; ++i) {
      const double t = 0.9 * T * i / 7.0;
      s.push_back({t, C * std::pow(T - t, e)});
    }
    const auto f = fit_blowup_exponent(s, T);
    CHECK(std::abs(f.exponent - e) <= 1e-10 * std::max(1.0, std::abs(e)));
    CHECK(std::abs(f.prefactor - C) <= 1e-10 * C);
  }
}

TEST_CASE("fit preconditions") {
  std::vector<FitSample> three{{0.0, 1.0}, {0.1, 1.0}, {0.2, 1.0}};
  CHECK(kind_of([&] { fit_blowup_exponent(three, 1.0); }) == ErrorKind::Param);
  std::vector<FitSample> same(4, FitSample{0.5, 2.0});
  CHECK(kind_of([&] { fit_blowup_exponent(same, 1.0); }) == ErrorKind::DegenerateFit);
  std::vector<FitSample> late{{0.0, 1.0}, {0.1, 1.0}, {0.2, 1.0}, {1.0, 1.0}};
  CHECK(kind_of([&] { fit_blowup_exponent(late, 1.0); }) == ErrorKind::Domain);
  std::vector<FitSample> neg{{0.0, 1.0}, {0.1, 1.0}, {0.2, -1.0}, {0.3, 1.0}};
  CHECK(kind_of([&] { fit_blowup_exponent(neg, 1.0); }) == ErrorKind::Domain);
}

TEST_CASE("gradient sup-norm is Type I") {
  const SolutionParams p;
  const DiagnosticRegion region;
  std::vector<FitSample> s;
  for (int i = 0; i < 8; ++i) {
    const double t = 0.9 * i / 7.0;
    s.push_back({t, sup_gradient(p, t, region)});
  }
  CHECK(std::abs(fit_blowup_exponent(s, 1.0).exponent + 1.0) <= 0.01);
  // |grad v|_F at t = 0 on the region against a finite-difference oracle at r = r_lo, z = +-1.
  const oracle::Params op{1.0, 1.0, 1.0};
  double g2 = 0.0;
  const double x[3] = {0.5, 0.0, 1.0};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double dij = oracle::d1(
          [&](double h) {
            double y[3] = {x[0], x[1], x[2]};
            y[j] += h;
            return oracle::velocity_cart(op, 0.0, y[0], y[1], y[2])[i];
          },
          0.0);
      g2 += dij * dij;
    }
  }
  CHECK(sup_gradient(p, 0.0, region) >= std::sqrt(g2) * (1 - 1e-8));
}

TEST_CASE("vorticity sup-norm and the BKM integral") {
  const SolutionParams p;
  DiagnosticRegion region;
  region.r_lo = 1.0;
  CHECK(sup_vorticity(p, 0.0, region) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sup_vorticity_closed_form(p, 0.0, 1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sup_vorticity(p, 0.6, region) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(bkm_integral(p, region, 0.0) == 0.0);

  // Halving tau adds ln 2.
  const double i1 = bkm_integral(p, region, 0.5);
  const double i2 = bkm_integral(p, region, 0.75);
  CHECK(std::abs((i2 - i1) / std::log(2.0) - 1.0) <= 0.01);
  CHECK(i1 == doctest::Approx(std::log(2.0)).epsilon(1e-10));

  CHECK(kind_of([&] { bkm_integral(p, region, 1.0); }) == ErrorKind::Domain);
  SolutionParams ns = p;
  ns.variant = Variant::NSInverseR;
  CHECK(kind_of([&] { diagnose(ns); }) == ErrorKind::Variant);
}

TEST_CASE("closed-form vorticity sup against the grid for other parameters") {
  SolutionParams p;
  p.a = -0.4;
  p.k = 2.5;
  p.t_star = 2.0;
  const DiagnosticRegion region;
  CHECK(sup_vorticity(p, 0.7, region) ==
        doctest::Approx(sup_vorticity_closed_form(p, 0.7, region.r_lo, region.r_hi)).epsilon(1e-12));
}

TEST_CASE("full diagnostics on the preset") {
  const auto rep = diagnose(SolutionParams{});
  CHECK(rep.pass);
  CHECK(rep.fits_pass);
  CHECK(rep.bkm_pass);
  CHECK(rep.energy_pass);
  for (const auto& f : rep.fits) CHECK(std::abs(f.fit.exponent + 1.0) <= 0.01);
  for (const auto& b : rep.bkm) CHECK(b.rel_error <= 0.01);
  CHECK(std::abs(rep.energy_ratio - 4.0) <= 1e-6 * 4.0);
  CHECK(rep.energy_monotone);
  REQUIRE(rep.energy_eps.size() == 3);
  CHECK(rep.energy_eps[0].value < rep.energy_eps[1].value);
  CHECK(rep.energy_eps[1].value < rep.energy_eps[2].value);
}

}  // TEST_SUITE
