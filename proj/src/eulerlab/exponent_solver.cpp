#include "eulerlab/exponent_solver.hpp"

#include <algorithm>
#include <map>

#include "eulerlab/error.hpp"

namespace eulerlab {

bool ConstraintSystem::contains(const Poly& p) const {
  return std::any_of(relations.begin(), relations.end(),
                     [&](const Relation& r) { return r.poly == p || r.poly == -p; });
}

std::string ConstraintSystem::str() const {
  std::string out;
  for (const auto& r : relations) out += r.poly.str() + " = 0    [" + r.origin + "]\n";
  return out;
}

std::optional<Poly> ExponentSolution::value(const std::string& symbol) const {
  for (const auto& a : assignments) {
    if (a.symbol == symbol) return a.value;
  }
  return std::nullopt;
}

std::string ExponentSolution::str() const {
  std::string out;
  for (const auto& a : assignments) {
    if (!out.empty()) out += ", ";
    out += a.symbol + "=" + a.value.str();
  }
  return out;
}

const char* to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::Family: return "family";
    case SolveStatus::NoSolution: return "no-solution";
  }
  return "?";
}

const ExponentSolution& SolveResult::primary() const {
  if (families.empty()) fail(ErrorKind::UnsupportedForm, "no solution: " + violated);
  return families.front();
}

namespace {

constexpr std::size_t kMaxTerms = 12;
constexpr std::size_t kMaxCombinations = 100000;

const char* kVarNames[] = {"r", "z", "tau"};

// Two terms can share a group unless some exponent differs by a nonzero constant.
bool may_match(const Monomial& x, const Monomial& y) {
  for (int i = 0; i < 3; ++i) {
    const LinearForm d = x.exps[i] - y.exps[i];
    if (d.is_constant() && !d.is_zero()) return false;
  }
  return true;
}

using Grouping = std::vector<std::vector<int>>;

void enumerate_groupings(const std::vector<Monomial>& terms, std::size_t j, Grouping& current,
                         std::vector<Grouping>& out) {
  if (j == terms.size()) {
    out.push_back(current);
    return;
  }
  for (auto& g : current) {
    if (!may_match(terms[g.front()], terms[j])) continue;
    g.push_back(static_cast<int>(j));
    enumerate_groupings(terms, j + 1, current, out);
    g.pop_back();
  }
  current.push_back({static_cast<int>(j)});
  enumerate_groupings(terms, j + 1, current, out);
  current.pop_back();
}

std::string term_list(const std::vector<int>& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + "}";
}

std::string exponent_label(const Monomial& m) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (!s.empty()) s += "*";
    s += std::string(kVarNames[i]) + "^(" + m.exps[i].str() + ")";
  }
  return s;
}

void add_relation(ConstraintSystem& sys, const Poly& p, const std::string& origin,
                  const std::set<std::string>& nonzero) {
  const Poly stripped = strip_nonzero_content(p, nonzero);
  if (stripped.is_zero()) return;
  sys.relations.push_back({stripped, origin});
}

ConstraintSystem relations_for(const TaggedEquation& eq, const Grouping& grouping,
                               const std::set<std::string>& nonzero) {
  ConstraintSystem sys;
  const auto& terms = eq.sum.terms();
  for (const auto& g : grouping) {
    const Monomial& rep = terms[g.front()];
    for (std::size_t n = 1; n < g.size(); ++n) {
      const Monomial& m = terms[g[n]];
      for (int i = 0; i < 3; ++i) {
        const LinearForm d = m.exps[i] - rep.exps[i];
        if (d.is_zero()) continue;
        add_relation(sys, Poly::from_linear(d),
                     eq.tag + ": exponent of " + kVarNames[i] + " matches for terms " +
                         term_list({g.front(), g[n]}),
                     nonzero);
      }
    }
    Poly coeff;
    for (int idx : g) coeff += terms[idx].coeff;
    add_relation(sys, coeff,
                 eq.tag + ": coefficient of " + exponent_label(rep) + " (terms " + term_list(g) +
                     ")",
                 nonzero);
  }
  return sys;
}

struct Branch {
  std::vector<Relation> relations;
  std::vector<Assignment> assignments;
};

struct Phase2 {
  const std::set<std::string>& unknowns;
  const std::set<std::string>& nonzero;
  std::vector<Branch> solved;
  std::string first_violation;

  void note_violation(const Relation& r) {
    if (first_violation.empty()) first_violation = r.poly.str() + " = 0 [" + r.origin + "]";
  }

  static void assign(Branch& b, const std::string& sym, const Poly& value,
                     const std::set<std::string>& nonzero) {
    for (auto& r : b.relations) r.poly = strip_nonzero_content(r.poly.substitute(sym, value), nonzero);
    for (auto& a : b.assignments) a.value = a.value.substitute(sym, value);
    b.assignments.push_back({sym, value});
  }

  // Returns false if the branch is inconsistent.
  bool tidy(Branch& b) {
    std::erase_if(b.relations, [](const Relation& r) { return r.poly.is_zero(); });
    for (const auto& r : b.relations) {
      if (r.poly.is_constant()) {
        note_violation(r);
        return false;
      }
    }
    return true;
  }

  // Finds a relation linear in some symbol of `pool` whose coefficient is a
  // constant (pass 0) or a monomial in nonzero symbols (pass 1).
  bool find_linear(const Branch& b, const std::set<std::string>& pool, std::string& sym,
                   Poly& value) const {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& r : b.relations) {
        for (const auto& s : r.poly.symbols()) {
          if (!pool.count(s)) continue;
          if (r.poly.max_degree(s) != 1 || r.poly.min_degree(s) != 0) continue;
          const Poly c = r.poly.coefficient(s, 1);
          const Poly rest = r.poly.coefficient(s, 0);
          bool ok = false;
          if (pass == 0) {
            ok = c.is_constant();
          } else if (c.is_monomial()) {
            const auto cs = c.symbols();
            ok = std::all_of(cs.begin(), cs.end(), [&](const std::string& n) {
              return nonzero.count(n) != 0 && n != s;
            });
          }
          if (!ok) continue;
          sym = s;
          value = (-rest).divide_by_monomial(c);
          return true;
        }
      }
    }
    return false;
  }

  void run(Branch b) {
    if (!tidy(b)) return;
    if (b.relations.empty()) {
      solved.push_back(std::move(b));
      return;
    }
    std::set<std::string> params;
    for (const auto& r : b.relations) {
      for (const auto& s : r.poly.symbols()) {
        if (!unknowns.count(s)) params.insert(s);
      }
    }
    std::string sym;
    Poly value;
    if (find_linear(b, unknowns, sym, value)) {
      assign(b, sym, value, nonzero);
      run(std::move(b));
      return;
    }
    // A single product must vanish: branch on each factor that may be zero.
    for (const auto& r : b.relations) {
      if (!r.poly.is_monomial()) continue;
      const auto& pp = r.poly.terms().begin()->first;
      std::vector<std::string> factors;
      for (const auto& [s, e] : pp) {
        if (e > 0 && !nonzero.count(s)) factors.push_back(s);
      }
      std::stable_partition(factors.begin(), factors.end(),
                            [&](const std::string& s) { return unknowns.count(s) != 0; });
      if (factors.empty()) {
        note_violation(r);
        return;
      }
      for (const auto& s : factors) {
        Branch child = b;
        assign(child, s, Poly(0), nonzero);
        run(std::move(child));
      }
      return;
    }
    if (find_linear(b, params, sym, value)) {
      assign(b, sym, value, nonzero);
      run(std::move(b));
      return;
    }
    fail(ErrorKind::UnsupportedForm,
         "cannot solve relation " + b.relations.front().poly.str() + " = 0 [" +
             b.relations.front().origin + "]");
  }
};

std::string assignment_key(const std::vector<Assignment>& as) {
  std::map<std::string, std::string> sorted;
  for (const auto& a : as) sorted[a.symbol] = a.value.str();
  std::string key;
  for (const auto& [s, v] : sorted) key += s + "=" + v + ";";
  return key;
}

}  // namespace

SolveResult solve_exponent_constraints(const ConstraintProblem& problem) {
  std::vector<std::vector<Grouping>> per_equation;
  std::size_t combinations = 1;
  std::set<std::string> all_symbols;
  for (const auto& eq : problem.equations) {
    const auto& terms = eq.sum.terms();
    if (terms.size() > kMaxTerms) {
      fail(ErrorKind::UnsupportedForm,
           eq.tag + ": too many distinct terms (" + std::to_string(terms.size()) + ")");
    }
    for (const auto& s : eq.sum.symbols()) all_symbols.insert(s);
    std::vector<Grouping> gs;
    Grouping current;
    enumerate_groupings(terms, 0, current, gs);
    combinations *= gs.size();
    if (combinations > kMaxCombinations) {
      fail(ErrorKind::UnsupportedForm, "too many term groupings to enumerate");
    }
    per_equation.push_back(std::move(gs));
  }

  struct Candidate {
    ExponentSolution solution;
    std::size_t order;
  };
  std::vector<Candidate> found;
  std::set<std::string> seen;
  SolveResult result;
  int best_failed_groups = -1;

  std::vector<std::size_t> idx(per_equation.size(), 0);
  for (std::size_t combo = 0; combo < combinations; ++combo) {
    ConstraintSystem sys;
    int groups = 0;
    for (std::size_t e = 0; e < per_equation.size(); ++e) {
      const Grouping& g = per_equation[e][idx[e]];
      groups += static_cast<int>(g.size());
      const ConstraintSystem part = relations_for(problem.equations[e], g, problem.nonzero);
      sys.relations.insert(sys.relations.end(), part.relations.begin(), part.relations.end());
    }

    Phase2 solver{problem.unknowns, problem.nonzero, {}, {}};
    solver.run(Branch{sys.relations, {}});
    for (auto& b : solver.solved) {
      const std::string key = assignment_key(b.assignments);
      if (!seen.insert(key).second) continue;
      ExponentSolution s;
      s.assignments = std::move(b.assignments);
      s.group_count = groups;
      s.system = sys;
      std::set<std::string> assigned;
      for (const auto& a : s.assignments) assigned.insert(a.symbol);
      for (const auto& u : problem.unknowns) {
        if (!assigned.count(u)) s.free_unknowns.push_back(u);
      }
      for (const auto& sym : all_symbols) {
        if (!assigned.count(sym) && !problem.unknowns.count(sym)) s.free_symbols.push_back(sym);
      }
      found.push_back({std::move(s), found.size()});
    }
    if (solver.solved.empty() &&
        (best_failed_groups < 0 || groups < best_failed_groups)) {
      best_failed_groups = groups;
      result.violated = solver.first_violation;
      if (result.families.empty()) result.system = sys;
    }

    for (std::size_t e = 0; e < idx.size(); ++e) {
      if (++idx[e] < per_equation[e].size()) break;
      idx[e] = 0;
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
    return x.solution.group_count < y.solution.group_count;
  });
  for (auto& c : found) result.families.push_back(std::move(c.solution));
  if (result.families.empty()) {
    result.status = SolveStatus::NoSolution;
  } else {
    result.system = result.families.front().system;
    result.violated.clear();
    result.status = result.families.front().free_unknowns.empty() ? SolveStatus::Solved
                                                                  : SolveStatus::Family;
  }
  return result;
}

}  // namespace eulerlab
