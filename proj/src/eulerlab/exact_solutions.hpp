#pragma once

// Closed-form self-similar blowup family of the axisymmetric Euler equations
// and its two Navier-Stokes relatives. Every evaluator is a template over the
// scalar type so the same formula serves plain doubles and jets.

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "eulerlab/error.hpp"
#include "eulerlab/jet.hpp"

namespace eulerlab {

enum class Variant { EulerSelfSimilar, NSInverseR, NSDecayingSwirl };

const char* to_string(Variant v) noexcept;
Variant parse_variant(const std::string& text);

struct SolutionParams {
  double a = 1.0;
  double k = 1.0;
  double t_star = 1.0;
  double nu = 0.0;  // ignored by EulerSelfSimilar
  Variant variant = Variant::EulerSelfSimilar;

  void validate() const;

  // Radial exponent of the Euler swirl, -(1 + 1/a).
  double swirl_exponent() const { return -(1.0 + 1.0 / a); }
  double effective_nu() const { return variant == Variant::EulerSelfSimilar ? 0.0 : nu; }
};

struct CylPoint {
  double t = 0.0;
  double r = 1.0;
  double z = 0.0;
};

struct CartPoint {
  double t = 0.0;
  double x1 = 1.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

template <class T>
struct CylVec {
  T vr{};
  T vtheta{};
  T vz{};
};

template <class T>
using CartVec = std::array<T, 3>;

using VelocityCyl = CylVec<double>;
using VelocityCart = CartVec<double>;
using Tensor3 = std::array<std::array<double, 3>, 3>;  // [i][j] = d v_i / d x_j

void validate_point(const SolutionParams& params, const CylPoint& pt);
void validate_point(const SolutionParams& params, const CartPoint& pt);

// ---------------------------------------------------------------------------
// Generic formulas. Callers are responsible for domain validation.

template <class T>
CylVec<T> velocity_cyl(const SolutionParams& p, const T& t, const T& r, const T& z) {
  const T tau = p.t_star - t;
  CylVec<T> v;
  v.vr = p.a * r / tau;
  v.vz = -2.0 * p.a * z / tau;
  switch (p.variant) {
    case Variant::EulerSelfSimilar:
      v.vtheta = p.k * pow(r, p.swirl_exponent()) / tau;
      break;
    case Variant::NSInverseR:
      v.vtheta = p.k / r;
      break;
    case Variant::NSDecayingSwirl:
      v.vtheta = p.k * r * pow(tau, 2.0 * p.a);
      break;
  }
  return v;
}

// Cartesian components as printed for each family (not via the frame
// conversion, which is tested against this independently).
template <class T>
CartVec<T> velocity_cart(const SolutionParams& p, const T& t, const T& x1, const T& x2,
                         const T& x3) {
  const T tau = p.t_star - t;
  const T rr = x1 * x1 + x2 * x2;
  T swirl_factor{};  // multiplies (x2, -x1)
  switch (p.variant) {
    case Variant::EulerSelfSimilar:
      // k r^-(2 + 1/a) / tau written as k r^q / (r tau) so that the exponent
      // is the same double as in the pressure.
      swirl_factor = p.k * pow(rr, 0.5 * p.swirl_exponent()) / (sqrt(rr) * tau);
      break;
    case Variant::NSInverseR:
      swirl_factor = p.k / rr;
      break;
    case Variant::NSDecayingSwirl:
      swirl_factor = p.k * pow(tau, 2.0 * p.a);
      break;
  }
  return {p.a * x1 / tau + x2 * swirl_factor, p.a * x2 / tau - x1 * swirl_factor,
          -2.0 * p.a * x3 / tau};
}

template <class T>
T stream_function(const SolutionParams& p, const T& t, const T& r, const T& z) {
  return -p.a * r * z / (p.t_star - t);
}

// Pressure as a function of rr = r^2, gauged so that P(t, r=1, z=0) = 0.
// The centrifugal part integrates (v_theta)^2 / r in r.
template <class T>
T pressure_rr(const SolutionParams& p, const T& t, const T& rr, const T& z) {
  // Parameter products are formed in T so that extended-precision jets do not
  // inherit a double rounding of a^2 or k^2.
  const T tau = p.t_star - t;
  const T tau2 = tau * tau;
  const double a = p.a;
  const double k = p.k;
  const T m_r = (rr - 1.0) / (2.0 * tau2);
  const T m_z = z * z / tau2;
  T meridional = -a * m_r - a * (a * m_r) + a * m_z - 2.0 * a * (a * m_z);
  T centrifugal{};
  switch (p.variant) {
    case Variant::EulerSelfSimilar: {
      const double q = p.swirl_exponent();
      if (a == -1.0) {
        centrifugal = 0.5 * k * (k * log(rr) / tau2);
      } else {
        centrifugal = k * (k * (pow(rr, q) - 1.0) / (2.0 * q * tau2));
      }
      break;
    }
    case Variant::NSInverseR:
      centrifugal = -0.5 * k * (k * (1.0 / rr - 1.0));
      break;
    case Variant::NSDecayingSwirl:
      centrifugal = 0.5 * k * (k * (rr - 1.0) * pow(tau, 4.0 * a));
      break;
  }
  return meridional + centrifugal;
}

template <class T>
T pressure_cyl(const SolutionParams& p, const T& t, const T& r, const T& z) {
  return pressure_rr(p, t, r * r, z);
}

template <class T>
T pressure_cart(const SolutionParams& p, const T& t, const T& x1, const T& x2, const T& x3) {
  return pressure_rr(p, t, x1 * x1 + x2 * x2, x3);
}

// ---------------------------------------------------------------------------
// Validated point evaluators.

VelocityCyl eval_cyl(const SolutionParams& params, const CylPoint& pt);
VelocityCart eval_cart(const SolutionParams& params, const CartPoint& pt);

struct StreamVorticity {
  double psi = 0.0;
  double omega_theta = 0.0;
};
StreamVorticity stream_and_vorticity(const SolutionParams& params, const CylPoint& pt);

double pressure(const SolutionParams& params, const CylPoint& pt);

// Gradient formulas exactly as printed for the Euler family, including the
// entries that disagree with direct differentiation.
Tensor3 gradient_paper(const SolutionParams& params, const CartPoint& pt);

// Exact Cartesian velocity gradient through jets.
Tensor3 gradient_exact(const SolutionParams& params, const CartPoint& pt);

// e_r, e_theta, e_z with e_theta = (x2/r, -x1/r, 0).
struct CylBasis {
  std::array<double, 3> e_r;
  std::array<double, 3> e_theta;
  std::array<double, 3> e_z;
};
CylBasis cylindrical_basis(double x1, double x2);
std::array<double, 3> to_cartesian(const VelocityCyl& v, double x1, double x2);

struct GradientEntryCheck {
  int row = 0;  // velocity component (0-based)
  int col = 0;  // derivative direction (0-based)
  double max_abs_diff = 0.0;
  bool mismatch = false;
};

struct GradientCrossCheck {
  std::vector<GradientEntryCheck> entries;  // all nine, row-major
  std::vector<std::array<int, 2>> mismatched;
  double third_row_max_diff = 0.0;
  int samples = 0;
};

// Compares gradient_paper with gradient_exact at `samples` seeded points in
// r in [0.5, 2], z in [-1, 1], t in [0, 0.8 t_star]. An entry is flagged when
// |printed - exact| > rel_tol * max(1, |exact|) at any sample.
GradientCrossCheck cross_check_gradient(const SolutionParams& params, int samples,
                                        std::uint64_t seed, double rel_tol = 1e-10);

}  // namespace eulerlab
