#pragma once

// Replays the power-law ansatz derivation of the blowup family in three
// stages: meridional velocity, stream function, swirl.

#include <optional>
#include <string>
#include <vector>

#include "eulerlab/exponent_solver.hpp"
#include "eulerlab/monomial.hpp"

namespace eulerlab {

struct DerivationStage {
  std::string name;
  FieldMap ansatz;
  std::vector<std::string> equation_text;
  ConstraintProblem problem;
  SolveResult result;
  FieldMap derived;  // fields implied after solving (e.g. omega from psi)
};

struct Derivation {
  std::vector<DerivationStage> stages;
  std::vector<Assignment> assignments;  // primary branch of every stage, in order
  FieldMap fields;                      // vr, vtheta, vz, psi, omega after substitution
  bool concrete = false;                // every field free of unknowns

  std::optional<Poly> value(const std::string& symbol) const;
  std::string text() const;
};

// Equation syntax: `lhs[=rhs]`, each side an operator name
// (incompressibility, swirl_transport, swirl_laplacian, biot_savart_r,
// biot_savart_z, vorticity_transport), a field role, or d_r(role), d_z(role),
// d_t(role). The equation requires lhs - rhs to vanish identically.
TaggedEquation parse_equation(const std::string& text, const FieldMap& fields);

// Runs one stage with caller-supplied ansatz and equations.
DerivationStage derive_stage(const std::string& name, const FieldMap& ansatz,
                             const std::vector<std::string>& equations,
                             const std::set<std::string>& unknowns,
                             const std::set<std::string>& nonzero);

// The three-stage pipeline. With `a_value` the parameter a is fixed before
// solving, so the swirl exponent comes out as a number.
Derivation derive_euler(std::optional<Rational> a_value = std::nullopt);

// Known presets: "euler-selfsimilar".
Derivation derive_preset(const std::string& preset, std::optional<Rational> a_value = std::nullopt);

}  // namespace eulerlab
