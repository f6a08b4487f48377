#pragma once

// Axisymmetric velocity fields as seen by the verifier. A flow evaluates at
// plain doubles and at jets over (t, r, z) or (t, x1, x2, x3); the verifier
// never needs to know which closed form or symbolic expression is behind it.

#include <array>
#include <memory>
#include <string>

#include "eulerlab/calculus.hpp"
#include "eulerlab/exact_solutions.hpp"
#include "eulerlab/monomial.hpp"

namespace eulerlab {

using CylArgs = std::array<double, 3>;    // t, r, z
using CylJetArgs = std::array<CylJet, 3>;
using CartArgs = std::array<double, 4>;   // t, x1, x2, x3
using CartJetArgs = std::array<CartJet, 4>;
// Quad-precision jets for residual sums whose individual terms can be many
// orders of magnitude larger than the sum.
using CylJetQ = Jet2<3, Quad>;
using CylJetQArgs = std::array<CylJetQ, 3>;
using CartJetQ = Jet2<4, Quad>;
using CartJetQArgs = std::array<CartJetQ, 4>;

class AxisymmetricFlow {
 public:
  virtual ~AxisymmetricFlow() = default;

  virtual std::string name() const = 0;
  virtual double t_star() const = 0;
  virtual double nu() const { return 0.0; }
  virtual bool has_stream() const { return false; }
  virtual bool has_pressure() const { return false; }
  virtual bool navier_stokes() const { return false; }

  virtual CylVec<double> cyl(const CylArgs& x) const = 0;
  virtual CylVec<CylJet> cyl(const CylJetArgs& x) const = 0;
  virtual CylVec<CylJetQ> cyl(const CylJetQArgs& x) const = 0;
  virtual CartVec<double> cart(const CartArgs& x) const = 0;
  virtual CartVec<CartJet> cart(const CartJetArgs& x) const = 0;
  virtual CartVec<CartJetQ> cart(const CartJetQArgs& x) const = 0;

  virtual double stream(const CylArgs& x) const;
  virtual CylJet stream(const CylJetArgs& x) const;
  virtual double pressure(const CartArgs& x) const;
  virtual CartJet pressure(const CartJetArgs& x) const;
  virtual CartJetQ pressure(const CartJetQArgs& x) const;
};

// Cartesian components from cylindrical ones with e_theta = (x2/r, -x1/r, 0).
template <class T>
CartVec<T> cyl_to_cart(const CylVec<T>& v, const T& x1, const T& x2) {
  const T r = sqrt(x1 * x1 + x2 * x2);
  const T c = x1 / r;
  const T s = x2 / r;
  return {v.vr * c + v.vtheta * s, v.vr * s - v.vtheta * c, v.vz};
}

// Routes the virtual overloads to templated members of Derived:
//   template <class T> CylVec<T> cyl_t(const T& t, const T& r, const T& z) const;
// and optionally cart_t, stream_t, pressure_t (Cartesian arguments).
template <class Derived>
class FlowImpl : public AxisymmetricFlow {
 public:
  CylVec<double> cyl(const CylArgs& x) const override { return self().cyl_t(x[0], x[1], x[2]); }
  CylVec<CylJet> cyl(const CylJetArgs& x) const override {
    return self().cyl_t(x[0], x[1], x[2]);
  }
  CylVec<CylJetQ> cyl(const CylJetQArgs& x) const override {
    return self().cyl_t(x[0], x[1], x[2]);
  }
  CartVec<double> cart(const CartArgs& x) const override {
    return self().cart_t(x[0], x[1], x[2], x[3]);
  }
  CartVec<CartJet> cart(const CartJetArgs& x) const override {
    return self().cart_t(x[0], x[1], x[2], x[3]);
  }
  CartVec<CartJetQ> cart(const CartJetQArgs& x) const override {
    return self().cart_t(x[0], x[1], x[2], x[3]);
  }

  template <class T>
  CartVec<T> cart_t(const T& t, const T& x1, const T& x2, const T& x3) const {
    return cyl_to_cart(self().cyl_t(t, sqrt(x1 * x1 + x2 * x2), x3), x1, x2);
  }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

// The closed-form family, Cartesian components as printed.
class ExactFlow final : public FlowImpl<ExactFlow> {
 public:
  explicit ExactFlow(const SolutionParams& params);

  std::string name() const override;
  double t_star() const override { return params_.t_star; }
  double nu() const override { return params_.effective_nu(); }
  bool has_stream() const override { return params_.variant == Variant::EulerSelfSimilar; }
  bool has_pressure() const override { return true; }
  bool navier_stokes() const override { return params_.variant != Variant::EulerSelfSimilar; }
  const SolutionParams& params() const { return params_; }

  CartVec<double> cart(const CartArgs& x) const override { return cart_t(x[0], x[1], x[2], x[3]); }
  CartVec<CartJet> cart(const CartJetArgs& x) const override {
    return cart_t(x[0], x[1], x[2], x[3]);
  }
  CartVec<CartJetQ> cart(const CartJetQArgs& x) const override {
    return cart_t(x[0], x[1], x[2], x[3]);
  }
  double stream(const CylArgs& x) const override { return stream_t(x[0], x[1], x[2]); }
  CylJet stream(const CylJetArgs& x) const override { return stream_t(x[0], x[1], x[2]); }
  double pressure(const CartArgs& x) const override { return pressure_t(x[0], x[1], x[2], x[3]); }
  CartJet pressure(const CartJetArgs& x) const override {
    return pressure_t(x[0], x[1], x[2], x[3]);
  }
  CartJetQ pressure(const CartJetQArgs& x) const override {
    return pressure_t(x[0], x[1], x[2], x[3]);
  }

  template <class T>
  CylVec<T> cyl_t(const T& t, const T& r, const T& z) const {
    return velocity_cyl(params_, t, r, z);
  }
  template <class T>
  CartVec<T> cart_t(const T& t, const T& x1, const T& x2, const T& x3) const {
    return velocity_cart(params_, t, x1, x2, x3);
  }
  template <class T>
  T stream_t(const T& t, const T& r, const T& z) const {
    return stream_function(params_, t, r, z);
  }
  template <class T>
  T pressure_t(const T& t, const T& x1, const T& x2, const T& x3) const {
    return pressure_cart(params_, t, x1, x2, x3);
  }

 private:
  SolutionParams params_;
};

// vr = cr r^er / tau, vz = cz sgn(z)|z|^ez / tau, vtheta = ct r^et / tau, with
// the stream function and pressure of a reference solution. Used to check
// that the verifier rejects perturbed constants.
struct PowerLawConstants {
  double cr = 1.0, er = 1.0;
  double cz = -2.0, ez = 1.0;
  double ct = 1.0, et = -2.0;

  static PowerLawConstants from(const SolutionParams& p);
  static constexpr int kCount = 6;
  static const char* label(int i);
  double& operator[](int i);
};

class PowerLawFlow final : public FlowImpl<PowerLawFlow> {
 public:
  PowerLawFlow(const PowerLawConstants& c, const SolutionParams& reference);

  std::string name() const override { return "power-law"; }
  double t_star() const override { return ref_.t_star; }
  bool has_stream() const override { return true; }
  bool has_pressure() const override { return true; }

  double stream(const CylArgs& x) const override { return stream_function(ref_, x[0], x[1], x[2]); }
  CylJet stream(const CylJetArgs& x) const override {
    return stream_function(ref_, x[0], x[1], x[2]);
  }
  double pressure(const CartArgs& x) const override {
    return pressure_cart(ref_, x[0], x[1], x[2], x[3]);
  }
  CartJet pressure(const CartJetArgs& x) const override {
    return pressure_cart(ref_, x[0], x[1], x[2], x[3]);
  }
  CartJetQ pressure(const CartJetQArgs& x) const override {
    return pressure_cart(ref_, x[0], x[1], x[2], x[3]);
  }

  template <class T>
  CylVec<T> cyl_t(const T& t, const T& r, const T& z) const {
    const T tau = ref_.t_star - t;
    return {c_.cr * power(r, c_.er) / tau, c_.ct * power(r, c_.et) / tau,
            c_.cz * signed_power(z, c_.ez) / tau};
  }

 private:
  template <class T>
  static T power(const T& x, double e) {
    if (e == std::round(e) && std::abs(e) < 64.0) return powi(x, static_cast<int>(e));
    return pow(x, e);
  }
  template <class T>
  static T signed_power(const T& x, double e) {
    if (e == std::round(e) && std::abs(e) < 64.0) return powi(x, static_cast<int>(e));
    return value_of(x) < 0.0 ? -pow(-x, e) : pow(x, e);
  }

  PowerLawConstants c_;
  SolutionParams ref_;
};

// Fields given as monomial sums (roles vr, vtheta, vz, optional psi) with the
// pressure of a matching closed-form solution.
class MonomialFlow final : public FlowImpl<MonomialFlow> {
 public:
  MonomialFlow(const FieldMap& fields, const SymbolValues& values, const SolutionParams& reference);

  std::string name() const override { return "monomial"; }
  double t_star() const override { return ref_.t_star; }
  bool has_stream() const override { return has_psi_; }
  bool has_pressure() const override { return true; }

  double stream(const CylArgs& x) const override;
  CylJet stream(const CylJetArgs& x) const override;
  double pressure(const CartArgs& x) const override {
    return pressure_cart(ref_, x[0], x[1], x[2], x[3]);
  }
  CartJet pressure(const CartJetArgs& x) const override {
    return pressure_cart(ref_, x[0], x[1], x[2], x[3]);
  }
  CartJetQ pressure(const CartJetQArgs& x) const override {
    return pressure_cart(ref_, x[0], x[1], x[2], x[3]);
  }

  template <class T>
  CylVec<T> cyl_t(const T& t, const T& r, const T& z) const {
    return {vr_.evaluate(values_, ref_.t_star, t, r, z),
            vtheta_.evaluate(values_, ref_.t_star, t, r, z),
            vz_.evaluate(values_, ref_.t_star, t, r, z)};
  }

 private:
  MonomialSum vr_, vtheta_, vz_, psi_;
  bool has_psi_ = false;
  SymbolValues values_;
  SolutionParams ref_;
};

}  // namespace eulerlab
