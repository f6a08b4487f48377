#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "eulerlab/error.hpp"
#include "eulerlab/jet.hpp"

namespace eulerlab {

// Variable slots for cylindrical (t, r, z) and Cartesian (t, x1, x2, x3) jets.
namespace cyl {
inline constexpr std::size_t T = 0, R = 1, Z = 2;
}
namespace cart {
inline constexpr std::size_t T = 0, X1 = 1, X2 = 2, X3 = 3;
}

using CylJet = Jet2<3>;
using CartJet = Jet2<4>;

enum class DiffMode { ExactJet, CentralDifference };

struct DiffConfig {
  DiffMode mode = DiffMode::ExactJet;
  double h = 1e-4;  // central_difference only

  void validate() const {
    if (mode == DiffMode::CentralDifference && !(h >= 1e-8 && h <= 1e-2)) {
      fail(ErrorKind::Param, "central-difference step must lie in [1e-8, 1e-2]");
    }
  }
};

template <std::size_t N>
std::array<Jet2<N>, N> seed(const std::array<double, N>& x) {
  std::array<Jet2<N>, N> vars;
  for (std::size_t i = 0; i < N; ++i) vars[i] = Jet2<N>::variable(x[i], i);
  return vars;
}

// Second-order jet of a scalar field at x. `field` must be callable with
// std::array<double, N> and with std::array<Jet2<N>, N>.
template <std::size_t N, class Field>
Jet2<N> jet_eval(const Field& field, const std::array<double, N>& x,
                 const DiffConfig& config = {}) {
  config.validate();
  if (config.mode == DiffMode::ExactJet) return field(seed(x));

  const double h = config.h;
  auto at = [&](std::size_t i, double di, std::size_t j, double dj) {
    std::array<double, N> y = x;
    y[i] += di;
    y[j] += dj;
    return static_cast<double>(field(y));
  };
  Jet2<N> out;
  const double f0 = field(x);
  out.value = f0;
  for (std::size_t i = 0; i < N; ++i) {
    const double fp = at(i, h, i, 0.0);
    const double fm = at(i, -h, i, 0.0);
    out.grad[i] = (fp - fm) / (2.0 * h);
    out.hess[i * N + i] = (fp - 2.0 * f0 + fm) / (h * h);
    for (std::size_t j = 0; j < i; ++j) {
      const double mixed =
          (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) / (4.0 * h * h);
      out.hess[i * N + j] = mixed;
      out.hess[j * N + i] = mixed;
    }
  }
  return out;
}

struct VorticityVector {
  double omega_r = 0.0;
  double omega_theta = 0.0;
  double omega_z = 0.0;
};

inline void require_off_axis(double r) {
  if (!(r > 0.0)) fail(ErrorKind::Domain, "r must be positive (axis excluded)");
}

// (1/r) d_r(r vr) + d_z vz
inline double divergence_axisym(const CylJet& vr, const CylJet& vz, double r) {
  require_off_axis(r);
  return vr.value / r + vr.d(cyl::R) + vz.d(cyl::Z);
}

// (d_rr + (1/r) d_r + d_zz - 1/r^2) f
inline double swirl_laplacian(const CylJet& f, double r) {
  require_off_axis(r);
  return f.dd(cyl::R, cyl::R) + f.d(cyl::R) / r + f.dd(cyl::Z, cyl::Z) - f.value / (r * r);
}

// (d_rr + (1/r) d_r + d_zz) f
inline double scalar_laplacian_axisym(const CylJet& f, double r) {
  require_off_axis(r);
  return f.dd(cyl::R, cyl::R) + f.d(cyl::R) / r + f.dd(cyl::Z, cyl::Z);
}

inline VorticityVector vorticity_axisym(const CylJet& vr, const CylJet& vtheta, const CylJet& vz,
                                        double r) {
  require_off_axis(r);
  VorticityVector w;
  w.omega_r = -vtheta.d(cyl::Z);
  w.omega_theta = vr.d(cyl::Z) - vz.d(cyl::R);
  w.omega_z = vtheta.value / r + vtheta.d(cyl::R);
  return w;
}

// Cartesian operators on jets over (t, x1, x2, x3); spatial slots are 1..3.
inline std::array<double, 3> cart_gradient(const CartJet& f) {
  return {f.d(cart::X1), f.d(cart::X2), f.d(cart::X3)};
}

inline double cart_divergence(const std::array<CartJet, 3>& v) {
  return v[0].d(cart::X1) + v[1].d(cart::X2) + v[2].d(cart::X3);
}

inline std::array<double, 3> cart_curl(const std::array<CartJet, 3>& v) {
  return {v[2].d(cart::X2) - v[1].d(cart::X3), v[0].d(cart::X3) - v[2].d(cart::X1),
          v[1].d(cart::X1) - v[0].d(cart::X2)};
}

inline double cart_laplacian(const CartJet& f) {
  return f.dd(cart::X1, cart::X1) + f.dd(cart::X2, cart::X2) + f.dd(cart::X3, cart::X3);
}

// Field-level conveniences: evaluate the jets, then apply the operator.
template <class FieldR, class FieldZ>
double divergence_axisym(const FieldR& vr, const FieldZ& vz, const std::array<double, 3>& pt,
                         const DiffConfig& config = {}) {
  return divergence_axisym(jet_eval(vr, pt, config), jet_eval(vz, pt, config), pt[cyl::R]);
}

template <class Field>
double swirl_laplacian(const Field& f, const std::array<double, 3>& pt,
                       const DiffConfig& config = {}) {
  return swirl_laplacian(jet_eval(f, pt, config), pt[cyl::R]);
}

template <class FieldR, class FieldT, class FieldZ>
VorticityVector vorticity_axisym(const FieldR& vr, const FieldT& vtheta, const FieldZ& vz,
                                 const std::array<double, 3>& pt, const DiffConfig& config = {}) {
  return vorticity_axisym(jet_eval(vr, pt, config), jet_eval(vtheta, pt, config),
                          jet_eval(vz, pt, config), pt[cyl::R]);
}

}  // namespace eulerlab
