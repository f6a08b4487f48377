#pragma once

// Sums of Laurent monomials c * r^alpha * z^beta * tau^gamma with tau = T* - t.
// Coefficients are Laurent polynomials in named symbols and exponents are
// affine forms in named symbols, so ansatz unknowns can sit in either place.

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "eulerlab/error.hpp"
#include "eulerlab/jet.hpp"
#include "eulerlab/symbolic.hpp"

namespace eulerlab {

enum class Var { R = 0, Z = 1, T = 2 };

struct Monomial {
  Poly coeff;
  std::array<LinearForm, 3> exps;  // r, z, tau

  std::string str() const;
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

class MonomialSum {
 public:
  MonomialSum() = default;
  MonomialSum(const Monomial& m);  // NOLINT: single terms promote implicitly
  static MonomialSum constant(const Poly& c);
  static MonomialSum variable(Var v);  // r, z or tau

  // Parses "a*r^p*tau^-1 - 2*a*z*tau^-1". See parse_ansatz below.
  static MonomialSum parse(const std::string& text);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<std::string> symbols() const;

  MonomialSum& operator+=(const MonomialSum& o);
  MonomialSum& operator-=(const MonomialSum& o);
  friend MonomialSum operator+(MonomialSum a, const MonomialSum& b) { return a += b; }
  friend MonomialSum operator-(MonomialSum a, const MonomialSum& b) { return a -= b; }
  friend MonomialSum operator*(const MonomialSum& a, const MonomialSum& b);
  friend MonomialSum operator*(const Poly& c, const MonomialSum& b);
  MonomialSum operator-() const;

  // Multiplies by r^shift (or z, tau): exact exponent shift.
  MonomialSum shift(Var v, const LinearForm& by) const;

  MonomialSum substitute(const std::string& name, const Poly& value) const;

  friend bool operator==(const MonomialSum& a, const MonomialSum& b) = default;

  std::string str() const;

  // Numeric evaluation at (t, r, z) given T* and symbol values. Works for
  // doubles and jets. Integral exponents use integer powers so negative z is
  // allowed; other exponents need a positive base.
  template <class T>
  T evaluate(const SymbolValues& values, double t_star, const T& t, const T& r, const T& z) const;

 private:
  void normalize();

  std::vector<Monomial> terms_;  // sorted by exponent triple, merged
};

MonomialSum differentiate(const MonomialSum& f, Var v);

enum class Operator {
  Incompressibility,    // d_r(r vr) + d_z(r vz)
  SwirlTransport,       // vtheta_t + vr vtheta_r + vz vtheta_z + vr vtheta / r
  SwirlLaplacian,       // -(Lap - 1/r^2) psi, i.e. the omega implied by psi
  BiotSavartR,          // -d_z psi
  BiotSavartZ,          // (1/r) d_r(r psi)
  VorticityTransport,   // omega_t + vr omega_r + vz omega_z - (2/r) vtheta vtheta_z - vr omega / r
};

const char* to_string(Operator op) noexcept;
Operator parse_operator(const std::string& text);

using FieldMap = std::map<std::string, MonomialSum>;  // roles: vr vtheta vz psi omega

MonomialSum apply_operator(Operator op, const FieldMap& fields);

// ---------------------------------------------------------------------------

template <class T>
T MonomialSum::evaluate(const SymbolValues& values, double t_star, const T& t, const T& r,
                        const T& z) const {
  const T tau = t_star - t;
  T total(0.0);
  for (const auto& m : terms_) {
    T term(m.coeff.evaluate(values));
    const std::array<const T*, 3> bases{&r, &z, &tau};
    for (int i = 0; i < 3; ++i) {
      const double e = m.exps[i].evaluate(values);
      if (e == 0.0) continue;
      const double rounded = std::round(e);
      if (rounded == e && std::abs(e) < 64.0) {
        term = term * powi(*bases[i], static_cast<int>(rounded));
      } else {
        term = term * pow(*bases[i], e);
      }
    }
    total = total + term;
  }
  return total;
}

}  // namespace eulerlab
