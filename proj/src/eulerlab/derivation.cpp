#include "eulerlab/derivation.hpp"

#include <sstream>

#include "eulerlab/error.hpp"

namespace eulerlab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

const MonomialSum& lookup(const FieldMap& fields, const std::string& role) {
  auto it = fields.find(role);
  if (it == fields.end()) fail(ErrorKind::MissingField, "no field '" + role + "'");
  return it->second;
}

MonomialSum eval_side(const std::string& raw, const FieldMap& fields) {
  const std::string s = trim(raw);
  if (s.empty() || s == "0") return {};
  if (s.size() > 4 && s.starts_with("d_") && s[3] == '(' && s.back() == ')') {
    const char v = s[2];
    const std::string role = trim(s.substr(4, s.size() - 5));
    const MonomialSum& f = lookup(fields, role);
    if (v == 'r') return differentiate(f, Var::R);
    if (v == 'z') return differentiate(f, Var::Z);
    if (v == 't') return differentiate(f, Var::T);
    fail(ErrorKind::Parse, "unknown derivative '" + s + "'");
  }
  if (fields.count(s)) return fields.at(s);
  return apply_operator(parse_operator(s), fields);
}

FieldMap substitute_all(FieldMap fields, const std::vector<Assignment>& as) {
  for (auto& [role, f] : fields) {
    for (const auto& a : as) f = f.substitute(a.symbol, a.value);
  }
  return fields;
}

// Substitutes where possible; leaves a field untouched if an assignment cannot
// be placed in an exponent (symbolic non-linear value).
MonomialSum substitute_partial(MonomialSum f, const std::vector<Assignment>& as, bool& complete) {
  for (const auto& a : as) {
    try {
      f = f.substitute(a.symbol, a.value);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedForm) throw;
      complete = false;
    }
  }
  return f;
}

FieldMap fix_a(const FieldMap& fields, const std::optional<Rational>& a) {
  if (!a) return fields;
  return substitute_all(fields, {{"a", Poly(*a)}});
}

}  // namespace

TaggedEquation parse_equation(const std::string& text, const FieldMap& fields) {
  const auto eq = text.find('=');
  MonomialSum sum = eval_side(text.substr(0, eq), fields);
  if (eq != std::string::npos) sum -= eval_side(text.substr(eq + 1), fields);
  return {trim(text), sum};
}

DerivationStage derive_stage(const std::string& name, const FieldMap& ansatz,
                             const std::vector<std::string>& equations,
                             const std::set<std::string>& unknowns,
                             const std::set<std::string>& nonzero) {
  DerivationStage st;
  st.name = name;
  st.ansatz = ansatz;
  st.equation_text = equations;
  st.problem.unknowns = unknowns;
  st.problem.nonzero = nonzero;
  for (const auto& e : equations) st.problem.equations.push_back(parse_equation(e, ansatz));
  st.result = solve_exponent_constraints(st.problem);
  return st;
}

std::optional<Poly> Derivation::value(const std::string& symbol) const {
  for (const auto& a : assignments) {
    if (a.symbol == symbol) return a.value;
  }
  return std::nullopt;
}

Derivation derive_euler(std::optional<Rational> a_value) {
  if (a_value && a_value->is_zero()) fail(ErrorKind::Param, "a must be nonzero");
  Derivation d;
  const std::set<std::string> nz_a = a_value ? std::set<std::string>{} : std::set<std::string>{"a"};

  FieldMap meridional = fix_a({{"vr", MonomialSum::parse("a*r^p*tau^-1")},
                               {"vz", MonomialSum::parse("b*z^q*tau^-1")}},
                              a_value);
  d.stages.push_back(derive_stage("meridional velocity", meridional, {"incompressibility"},
                                  {"p", "q", "b"}, nz_a));
  const auto& s1 = d.stages.back().result.primary();
  d.assignments = s1.assignments;
  FieldMap fields = substitute_all(meridional, s1.assignments);

  fields["psi"] = fix_a({{"psi", MonomialSum::parse("abar*r*z*tau^-1")}}, a_value).at("psi");
  d.stages.push_back(derive_stage("stream function", fields,
                                  {"vr = biot_savart_r", "vz = biot_savart_z"}, {"abar"}, nz_a));
  const auto& s2 = d.stages.back().result.primary();
  d.assignments.insert(d.assignments.end(), s2.assignments.begin(), s2.assignments.end());
  fields = substitute_all(fields, s2.assignments);
  fields["omega"] = apply_operator(Operator::SwirlLaplacian, fields);
  d.stages.back().derived["omega"] = fields["omega"];

  std::set<std::string> nz_ak = nz_a;
  nz_ak.insert("k");
  fields["vtheta"] = MonomialSum::parse("k*z^p1*r^q1*tau^-1");
  // With omega = 0 the vorticity equation reduces to (2/r) vtheta d_z vtheta = 0,
  // imposed as d_z vtheta = 0 since k != 0.
  d.stages.push_back(derive_stage("swirl", fields, {"swirl_transport", "d_z(vtheta)"},
                                  {"p1", "q1"}, nz_ak));
  const auto& s3 = d.stages.back().result.primary();
  d.assignments.insert(d.assignments.end(), s3.assignments.begin(), s3.assignments.end());

  bool complete = true;
  fields["vtheta"] = substitute_partial(fields["vtheta"], s3.assignments, complete);
  d.fields = fields;
  std::set<std::string> unknowns;
  for (const auto& st : d.stages) unknowns.insert(st.problem.unknowns.begin(), st.problem.unknowns.end());
  d.concrete = complete;
  for (const auto& [role, f] : d.fields) {
    for (const auto& s : f.symbols()) {
      if (unknowns.count(s)) d.concrete = false;
    }
  }
  return d;
}

Derivation derive_preset(const std::string& preset, std::optional<Rational> a_value) {
  if (preset == "euler-selfsimilar" || preset == "euler") return derive_euler(a_value);
  fail(ErrorKind::Config, "unknown derivation preset '" + preset + "'");
}

std::string Derivation::text() const {
  std::ostringstream out;
  int n = 1;
  for (const auto& st : stages) {
    out << "stage " << n++ << ": " << st.name << "\n";
    for (const auto& [role, f] : st.ansatz) out << "  " << role << " = " << f.str() << "\n";
    out << "  require:";
    for (std::size_t i = 0; i < st.equation_text.size(); ++i) {
      out << (i ? ", " : " ") << st.equation_text[i];
    }
    out << "\n  relations:\n";
    for (const auto& r : st.result.system.relations) {
      out << "    " << r.poly.str() << " = 0    [" << r.origin << "]\n";
    }
    out << "  status: " << to_string(st.result.status) << "\n";
    if (st.result.families.empty()) {
      out << "  violated: " << st.result.violated << "\n";
      continue;
    }
    out << "  solution: " << st.result.primary().str() << "\n";
    for (std::size_t i = 1; i < st.result.families.size(); ++i) {
      out << "  alternative: " << st.result.families[i].str() << "\n";
    }
    for (const auto& [role, f] : st.derived) out << "  " << role << " = " << f.str() << "\n";
  }
  out << "result:\n";
  for (const auto& a : assignments) out << "  " << a.symbol << "=" << a.value.str() << "\n";
  for (const auto& [role, f] : fields) out << "  " << role << " = " << f.str() << "\n";
  return out.str();
}

}  // namespace eulerlab
