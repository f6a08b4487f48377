#pragma once

// Exact symbolic scalars used by the monomial layer:
//   LinearForm - affine combination c0 + sum c_i s_i (exponents)
//   Poly       - Laurent polynomial over named symbols (coefficients)

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "eulerlab/rational.hpp"

namespace eulerlab {

using SymbolValues = std::map<std::string, double>;

class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Rational c) : constant_(c) {}  // NOLINT: constants promote implicitly
  static LinearForm symbol(const std::string& name);

  const Rational& constant() const { return constant_; }
  const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const std::string& name) const;

  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }
  std::set<std::string> symbols() const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& s);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
  LinearForm operator-() const { return LinearForm(*this) *= Rational(-1); }

  LinearForm substitute(const std::string& name, const LinearForm& value) const;
  double evaluate(const SymbolValues& values) const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) = default;
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b);

  std::string str() const;

 private:
  void prune();

  Rational constant_;
  std::map<std::string, Rational> coeffs_;
};

// Power product s1^e1 s2^e2 ... with nonzero integer exponents.
using PowerProduct = std::map<std::string, int>;

class Poly {
 public:
  Poly() = default;
  Poly(Rational c);  // NOLINT: constants promote implicitly
  static Poly symbol(const std::string& name, int power = 1);
  static Poly from_linear(const LinearForm& form);

  const std::map<PowerProduct, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // coefficient of the empty product
  bool is_monomial() const { return terms_.size() == 1; }
  std::set<std::string> symbols() const;
  bool contains(const std::string& name) const;

  // Max / min exponent of `name` over all terms (0 if absent).
  int max_degree(const std::string& name) const;
  int min_degree(const std::string& name) const;

  // Sum of the terms where `name` has exactly `power`, with `name` removed.
  Poly coefficient(const std::string& name, int power) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly operator-() const;

  // Exact division by a single-term Laurent monomial.
  Poly divide_by_monomial(const Poly& monomial) const;

  // Replaces `name` by `value`. Negative powers of `name` require `value` to
  // be a single term; otherwise UnsupportedForm is raised.
  Poly substitute(const std::string& name, const Poly& value) const;

  // Degree <= 1 without negative powers.
  std::optional<LinearForm> to_linear() const;

  double evaluate(const SymbolValues& values) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  // "-2*a", "a*q1 - 2*a*p1 + a + 1", "-(1 + 1/a)"
  std::string str() const;

 private:
  void add_term(const PowerProduct& pp, const Rational& c);

  std::map<PowerProduct, Rational> terms_;
};

// Divides out the lowest power of every symbol in `nonzero`, so that a
// relation P = 0 is replaced by the equivalent relation with no factor that
// is known to be nonzero.
Poly strip_nonzero_content(const Poly& p, const std::set<std::string>& nonzero);

}  // namespace eulerlab
