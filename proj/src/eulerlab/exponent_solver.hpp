#pragma once

// Solves "this monomial sum vanishes identically" constraints for unknown
// exponents and coefficients.
//
// Phase 1 groups the terms of each equation: terms in one group must share
// their exponent triple (linear relations among exponent unknowns) and their
// coefficients must sum to zero. Every way of grouping is tried.
// Phase 2 solves the collected relations by substitution, branching on
// products that must vanish.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eulerlab/monomial.hpp"

namespace eulerlab {

struct Relation {
  Poly poly;           // poly = 0
  std::string origin;  // which matching step produced it
};

struct ConstraintSystem {
  std::vector<Relation> relations;

  bool contains(const Poly& p) const;
  std::string str() const;
};

struct Assignment {
  std::string symbol;
  Poly value;
};

struct ExponentSolution {
  std::vector<Assignment> assignments;  // in solve order, fully back-substituted
  std::vector<std::string> free_unknowns;
  std::vector<std::string> free_symbols;  // every symbol the values still depend on
  int group_count = 0;                    // Phase 1 groups used by this branch
  ConstraintSystem system;                // relations of this branch's grouping

  std::optional<Poly> value(const std::string& symbol) const;
  std::string str() const;  // "p=1, q=1, b=-2*a"
};

enum class SolveStatus { Solved, Family, NoSolution };
const char* to_string(SolveStatus s) noexcept;

struct TaggedEquation {
  std::string tag;
  MonomialSum sum;  // required to vanish identically
};

struct ConstraintProblem {
  std::vector<TaggedEquation> equations;
  std::set<std::string> unknowns;
  std::set<std::string> nonzero;  // symbols known not to vanish (parameters or unknowns)
};

struct SolveResult {
  SolveStatus status = SolveStatus::NoSolution;
  // Primary family first (fewest Phase 1 groups, i.e. the most cancellation
  // between terms), then every other consistent branch.
  std::vector<ExponentSolution> families;
  ConstraintSystem system;  // relations of the primary branch (or the first tried)
  std::string violated;     // for NoSolution: the relation that failed and its origin

  const ExponentSolution& primary() const;
};

SolveResult solve_exponent_constraints(const ConstraintProblem& problem);

}  // namespace eulerlab
