#pragma once

// Second-order forward-mode jets: a value together with its gradient and
// Hessian with respect to N seeded variables. Arithmetic propagates both
// orders exactly (truncated Taylor arithmetic), so derivatives of composed
// closed-form fields come out at machine precision.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>

#include <quadmath.h>

#include "eulerlab/error.hpp"

namespace eulerlab {

// Quadruple precision for residual sums whose terms are many orders of
// magnitude larger than the sum itself.
using Quad = __float128;

// Elementary functions of the jet scalar types.
namespace scalar {
inline double pow(double x, double p) { return std::pow(x, p); }
inline long double pow(long double x, double p) { return std::pow(x, static_cast<long double>(p)); }
inline Quad pow(Quad x, double p) { return powq(x, p); }
inline double powi(double x, int n) { return std::pow(x, n); }
inline long double powi(long double x, int n) { return std::pow(x, n); }
inline Quad powi(Quad x, int n) { return powq(x, n); }
inline double sqrt(double x) { return std::sqrt(x); }
inline long double sqrt(long double x) { return std::sqrt(x); }
inline Quad sqrt(Quad x) { return sqrtq(x); }
inline double log(double x) { return std::log(x); }
inline long double log(long double x) { return std::log(x); }
inline Quad log(Quad x) { return logq(x); }
inline double exp(double x) { return std::exp(x); }
inline long double exp(long double x) { return std::exp(x); }
inline Quad exp(Quad x) { return expq(x); }
inline double sin(double x) { return std::sin(x); }
inline long double sin(long double x) { return std::sin(x); }
inline Quad sin(Quad x) { return sinq(x); }
inline double cos(double x) { return std::cos(x); }
inline long double cos(long double x) { return std::cos(x); }
inline Quad cos(Quad x) { return cosq(x); }
template <class S>
S abs(S x) { return x < 0 ? -x : x; }
}  // namespace scalar

// Plain scalars mixed with jets; non-deduced so a double literal combines
// with a long double jet.
template <class S>
using Scal = std::type_identity_t<S>;

template <std::size_t N, class S = double>
struct Jet2 {
  using Scalar = S;

  S value = 0;
  std::array<S, N> grad{};
  std::array<S, N * N> hess{};  // row-major, symmetric

  Jet2() = default;
  Jet2(S v) : value(v) {}  // NOLINT: constants promote implicitly

  static Jet2 variable(S v, std::size_t index) {
    Jet2 j(v);
    j.grad[index] = 1.0;
    return j;
  }

  S d(std::size_t i) const { return grad[i]; }
  S dd(std::size_t i, std::size_t j) const { return hess[i * N + j]; }

  Jet2 operator-() const {
    Jet2 r;
    r.value = -value;
    for (std::size_t i = 0; i < N; ++i) r.grad[i] = -grad[i];
    for (std::size_t i = 0; i < N * N; ++i) r.hess[i] = -hess[i];
    return r;
  }

  Jet2& operator+=(const Jet2& o) {
    value += o.value;
    for (std::size_t i = 0; i < N; ++i) grad[i] += o.grad[i];
    for (std::size_t i = 0; i < N * N; ++i) hess[i] += o.hess[i];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    value -= o.value;
    for (std::size_t i = 0; i < N; ++i) grad[i] -= o.grad[i];
    for (std::size_t i = 0; i < N * N; ++i) hess[i] -= o.hess[i];
    return *this;
  }
  Jet2& operator*=(S s) {
    value *= s;
    for (auto& g : grad) g *= s;
    for (auto& h : hess) h *= s;
    return *this;
  }
  Jet2& operator/=(S s) {
    value /= s;
    for (auto& g : grad) g /= s;
    for (auto& h : hess) h /= s;
    return *this;
  }
  Jet2& operator+=(S s) {
    value += s;
    return *this;
  }
  Jet2& operator-=(S s) {
    value -= s;
    return *this;
  }
};

template <std::size_t N, class S>
Jet2<N, S> operator+(Jet2<N, S> a, const Jet2<N, S>& b) { return a += b; }
template <std::size_t N, class S>
Jet2<N, S> operator-(Jet2<N, S> a, const Jet2<N, S>& b) { return a -= b; }
template <std::size_t N, class S>
Jet2<N, S> operator+(Jet2<N, S> a, Scal<S> b) { return a += b; }
template <std::size_t N, class S>
Jet2<N, S> operator+(Scal<S> a, Jet2<N, S> b) { return b += a; }
template <std::size_t N, class S>
Jet2<N, S> operator-(Jet2<N, S> a, Scal<S> b) { return a -= b; }
template <std::size_t N, class S>
Jet2<N, S> operator-(Scal<S> a, const Jet2<N, S>& b) { return (-b) += a; }
template <std::size_t N, class S>
Jet2<N, S> operator*(Jet2<N, S> a, Scal<S> b) { return a *= b; }
template <std::size_t N, class S>
Jet2<N, S> operator*(Scal<S> a, Jet2<N, S> b) { return b *= a; }
template <std::size_t N, class S>
Jet2<N, S> operator/(Jet2<N, S> a, Scal<S> b) { return a /= b; }

template <std::size_t N, class S>
Jet2<N, S> operator*(const Jet2<N, S>& a, const Jet2<N, S>& b) {
  Jet2<N, S> r;
  r.value = a.value * b.value;
  for (std::size_t i = 0; i < N; ++i) r.grad[i] = a.value * b.grad[i] + b.value * a.grad[i];
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const std::size_t ij = i * N + j;
      r.hess[ij] = a.value * b.hess[ij] + b.value * a.hess[ij] + a.grad[i] * b.grad[j] +
                   b.grad[i] * a.grad[j];
    }
  }
  return r;
}

// Chain rule for a scalar function with value f0, first derivative f1 and
// second derivative f2 at x.value.
template <std::size_t N, class S>
Jet2<N, S> chain(const Jet2<N, S>& x, S f0, S f1, S f2) {
  Jet2<N, S> r;
  r.value = f0;
  for (std::size_t i = 0; i < N; ++i) r.grad[i] = f1 * x.grad[i];
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      r.hess[i * N + j] = f1 * x.hess[i * N + j] + f2 * x.grad[i] * x.grad[j];
    }
  }
  return r;
}

template <std::size_t N, class S>
Jet2<N, S> reciprocal(const Jet2<N, S>& x) {
  if (x.value == 0.0) fail(ErrorKind::Domain, "jet division by zero");
  const S inv = 1.0 / x.value;
  return chain(x, inv, -inv * inv, 2.0 * inv * inv * inv);
}

template <std::size_t N, class S>
Jet2<N, S> operator/(const Jet2<N, S>& a, const Jet2<N, S>& b) { return a * reciprocal(b); }
template <std::size_t N, class S>
Jet2<N, S> operator/(Scal<S> a, const Jet2<N, S>& b) { return reciprocal(b) * a; }

// Real power; the base must be strictly positive.
template <std::size_t N, class S>
Jet2<N, S> pow(const Jet2<N, S>& x, double p) {
  if (!(x.value > 0.0)) {
    fail(ErrorKind::Domain,
         "jet pow requires a positive base, got " + std::to_string(static_cast<double>(x.value)));
  }
  const S f0 = scalar::pow(x.value, p);
  const S f1 = p * f0 / x.value;
  const S f2 = (p - 1.0) * f1 / x.value;
  return chain(x, f0, f1, f2);
}

// Integer power; any base (zero only for n >= 0).
template <std::size_t N, class S>
Jet2<N, S> powi(const Jet2<N, S>& x, int n) {
  if (n == 0) return Jet2<N, S>(S(1));
  if (x.value == 0.0 && n < 0) fail(ErrorKind::Domain, "negative power of zero");
  const S f0 = scalar::powi(x.value, n);
  const S f1 = n * scalar::powi(x.value, n - 1);
  const S f2 = n == 1 ? S(0) : static_cast<S>(n) * (n - 1) * scalar::powi(x.value, n - 2);
  return chain(x, f0, f1, f2);
}

template <std::size_t N, class S>
Jet2<N, S> sqrt(const Jet2<N, S>& x) {
  if (!(x.value > 0.0)) fail(ErrorKind::Domain, "jet sqrt requires a positive argument");
  const S s = scalar::sqrt(x.value);
  const S f1 = 0.5 / s;
  return chain(x, s, f1, -0.5 * f1 / x.value);
}

template <std::size_t N, class S>
Jet2<N, S> log(const Jet2<N, S>& x) {
  if (!(x.value > 0.0)) fail(ErrorKind::Domain, "jet log requires a positive argument");
  const S inv = 1.0 / x.value;
  return chain(x, scalar::log(x.value), inv, -inv * inv);
}

template <std::size_t N, class S>
Jet2<N, S> exp(const Jet2<N, S>& x) {
  const S e = scalar::exp(x.value);
  return chain(x, e, e, e);
}

template <std::size_t N, class S>
Jet2<N, S> sin(const Jet2<N, S>& x) {
  const S s = scalar::sin(x.value);
  return chain(x, s, scalar::cos(x.value), -s);
}

template <std::size_t N, class S>
Jet2<N, S> cos(const Jet2<N, S>& x) {
  const S c = scalar::cos(x.value);
  return chain(x, c, -scalar::sin(x.value), -c);
}

// Scalar-generic helpers so field code can be written once for double and
// for jets.
inline double value_of(double x) { return x; }
inline long double value_of(long double x) { return x; }
template <std::size_t N, class S>
S value_of(const Jet2<N, S>& x) { return x.value; }

inline double pow(double x, double p) {
  if (!(x > 0.0)) fail(ErrorKind::Domain, "pow requires a positive base, got " + std::to_string(x));
  return std::pow(x, p);
}
inline double powi(double x, int n) {
  if (x == 0.0 && n < 0) fail(ErrorKind::Domain, "negative power of zero");
  return std::pow(x, n);
}
inline long double pow(long double x, double p) {
  if (!(x > 0.0L)) fail(ErrorKind::Domain, "pow requires a positive base");
  return std::pow(x, static_cast<long double>(p));
}
inline long double powi(long double x, int n) {
  if (x == 0.0L && n < 0) fail(ErrorKind::Domain, "negative power of zero");
  return std::pow(x, n);
}
inline Quad value_of(Quad x) { return x; }
inline Quad pow(Quad x, double p) {
  if (!(x > 0)) fail(ErrorKind::Domain, "pow requires a positive base");
  return powq(x, p);
}
inline Quad powi(Quad x, int n) {
  if (x == 0 && n < 0) fail(ErrorKind::Domain, "negative power of zero");
  return powq(x, n);
}
using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;

}  // namespace eulerlab
