#include "eulerlab/monomial.hpp"

#include <algorithm>
#include <cctype>

namespace eulerlab {

namespace {

const char* var_name(int i) {
  static constexpr const char* names[] = {"r", "z", "tau"};
  return names[i];
}

bool exps_less(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end());
}

}  // namespace

std::string Monomial::str() const {
  std::string factors;
  for (int i = 0; i < 3; ++i) {
    if (exps[i].is_zero()) continue;
    std::string f = var_name(i);
    if (exps[i] != LinearForm(Rational(1))) {
      const std::string e = exps[i].str();
      const bool simple = exps[i].is_constant() ? exps[i].constant().is_integer()
                                                : (exps[i].coeffs().size() == 1 &&
                                                   exps[i].constant().is_zero() &&
                                                   exps[i].coeffs().begin()->second == Rational(1));
      f += "^" + (simple ? e : "(" + e + ")");
    }
    factors += (factors.empty() ? "" : "*") + f;
  }
  std::string c = coeff.str();
  if (factors.empty()) return c;
  if (coeff == Poly(1)) return factors;
  if (coeff == Poly(-1)) return "-" + factors;
  if (coeff.terms().size() > 1) c = "(" + c + ")";
  return c + "*" + factors;
}

MonomialSum::MonomialSum(const Monomial& m) {
  terms_.push_back(m);
  normalize();
}

MonomialSum MonomialSum::constant(const Poly& c) { return MonomialSum(Monomial{c, {}}); }

MonomialSum MonomialSum::variable(Var v) {
  Monomial m{Poly(1), {}};
  m.exps[static_cast<int>(v)] = LinearForm(Rational(1));
  return MonomialSum(m);
}

void MonomialSum::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(), exps_less);
  std::vector<Monomial> merged;
  for (auto& m : terms_) {
    if (!merged.empty() && merged.back().exps == m.exps) {
      merged.back().coeff += m.coeff;
    } else {
      merged.push_back(std::move(m));
    }
  }
  std::erase_if(merged, [](const Monomial& m) { return m.coeff.is_zero(); });
  terms_ = std::move(merged);
}

std::set<std::string> MonomialSum::symbols() const {
  std::set<std::string> out;
  for (const auto& m : terms_) {
    for (const auto& s : m.coeff.symbols()) out.insert(s);
    for (const auto& e : m.exps) {
      for (const auto& s : e.symbols()) out.insert(s);
    }
  }
  return out;
}

MonomialSum& MonomialSum::operator+=(const MonomialSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

MonomialSum MonomialSum::operator-() const {
  MonomialSum out = *this;
  for (auto& m : out.terms_) m.coeff = -m.coeff;
  return out;
}

MonomialSum& MonomialSum::operator-=(const MonomialSum& o) { return *this += -o; }

MonomialSum operator*(const MonomialSum& a, const MonomialSum& b) {
  MonomialSum out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Monomial m;
      m.coeff = x.coeff * y.coeff;
      for (int i = 0; i < 3; ++i) m.exps[i] = x.exps[i] + y.exps[i];
      out.terms_.push_back(std::move(m));
    }
  }
  out.normalize();
  return out;
}

MonomialSum operator*(const Poly& c, const MonomialSum& b) { return MonomialSum::constant(c) * b; }

MonomialSum MonomialSum::shift(Var v, const LinearForm& by) const {
  MonomialSum out = *this;
  for (auto& m : out.terms_) m.exps[static_cast<int>(v)] += by;
  out.normalize();
  return out;
}

MonomialSum MonomialSum::substitute(const std::string& name, const Poly& value) const {
  MonomialSum out;
  std::optional<LinearForm> linear;
  bool needs_linear = false;
  for (const auto& m : terms_) {
    for (const auto& e : m.exps) needs_linear = needs_linear || e.coeffs().count(name) != 0;
  }
  if (needs_linear) {
    linear = value.to_linear();
    if (!linear) {
      fail(ErrorKind::UnsupportedForm,
           "value " + value.str() + " for '" + name + "' is not linear; cannot place it in an exponent");
    }
  }
  for (const auto& m : terms_) {
    Monomial n;
    n.coeff = m.coeff.substitute(name, value);
    for (int i = 0; i < 3; ++i) n.exps[i] = linear ? m.exps[i].substitute(name, *linear) : m.exps[i];
    out.terms_.push_back(std::move(n));
  }
  out.normalize();
  return out;
}

std::string MonomialSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms_) {
    std::string s = m.str();
    if (out.empty()) {
      out = s;
    } else if (s.front() == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

MonomialSum differentiate(const MonomialSum& f, Var v) {
  const int i = static_cast<int>(v);
  MonomialSum out;
  for (const auto& m : f.terms()) {
    Monomial d = m;
    Poly factor = Poly::from_linear(m.exps[i]);
    // tau = T* - t, so d/dt tau^g = -g tau^(g-1)
    if (v == Var::T) factor = -factor;
    d.coeff = m.coeff * factor;
    d.exps[i] -= LinearForm(Rational(1));
    out += MonomialSum(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operators

const char* to_string(Operator op) noexcept {
  switch (op) {
    case Operator::Incompressibility: return "incompressibility";
    case Operator::SwirlTransport: return "swirl_transport";
    case Operator::SwirlLaplacian: return "swirl_laplacian";
    case Operator::BiotSavartR: return "biot_savart_r";
    case Operator::BiotSavartZ: return "biot_savart_z";
    case Operator::VorticityTransport: return "vorticity_transport";
  }
  return "?";
}

Operator parse_operator(const std::string& text) {
  for (Operator op : {Operator::Incompressibility, Operator::SwirlTransport,
                      Operator::SwirlLaplacian, Operator::BiotSavartR, Operator::BiotSavartZ,
                      Operator::VorticityTransport}) {
    if (text == to_string(op)) return op;
  }
  fail(ErrorKind::Parse, "unknown operator '" + text + "'");
}

namespace {

const MonomialSum& field(const FieldMap& fields, const std::string& role, Operator op) {
  auto it = fields.find(role);
  if (it == fields.end()) {
    fail(ErrorKind::MissingField,
         std::string(to_string(op)) + " needs field '" + role + "'");
  }
  return it->second;
}

const LinearForm kMinusOne(Rational(-1));
const LinearForm kOne(Rational(1));

}  // namespace

MonomialSum apply_operator(Operator op, const FieldMap& fields) {
  switch (op) {
    case Operator::Incompressibility: {
      const auto& vr = field(fields, "vr", op);
      const auto& vz = field(fields, "vz", op);
      return differentiate(vr.shift(Var::R, kOne), Var::R) +
             differentiate(vz.shift(Var::R, kOne), Var::Z);
    }
    case Operator::SwirlTransport: {
      const auto& vr = field(fields, "vr", op);
      const auto& vz = field(fields, "vz", op);
      const auto& vt = field(fields, "vtheta", op);
      return differentiate(vt, Var::T) + vr * differentiate(vt, Var::R) +
             vz * differentiate(vt, Var::Z) + (vr * vt).shift(Var::R, kMinusOne);
    }
    case Operator::SwirlLaplacian: {
      const auto& psi = field(fields, "psi", op);
      const MonomialSum lap = differentiate(differentiate(psi, Var::R), Var::R) +
                              differentiate(psi, Var::R).shift(Var::R, kMinusOne) +
                              differentiate(differentiate(psi, Var::Z), Var::Z) -
                              psi.shift(Var::R, LinearForm(Rational(-2)));
      return -lap;
    }
    case Operator::BiotSavartR:
      return -differentiate(field(fields, "psi", op), Var::Z);
    case Operator::BiotSavartZ:
      return differentiate(field(fields, "psi", op).shift(Var::R, kOne), Var::R)
          .shift(Var::R, kMinusOne);
    case Operator::VorticityTransport: {
      const auto& vr = field(fields, "vr", op);
      const auto& vz = field(fields, "vz", op);
      const auto& vt = field(fields, "vtheta", op);
      const auto& w = field(fields, "omega", op);
      return differentiate(w, Var::T) + vr * differentiate(w, Var::R) +
             vz * differentiate(w, Var::Z) -
             (Poly(2) * (vt * differentiate(vt, Var::Z))).shift(Var::R, kMinusOne) -
             (vr * w).shift(Var::R, kMinusOne);
    }
  }
  fail(ErrorKind::Parse, "unknown operator");
}

// ---------------------------------------------------------------------------
// Ansatz grammar
//
//   sum    := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := NUMBER | NAME ['^' expo] | '(' sum ')'
//   expo   := ['+'|'-'] (NUMBER | NAME) | '(' linear ')'
//
// NAME is r, z, tau or a coefficient symbol. Exponents of r, z, tau may be
// affine in symbols; coefficient symbols take integer exponents only.

namespace {

struct Token {
  enum Kind { Number, Name, Op, End } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
      out.push_back({Token::Number, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Name, s.substr(i, j - i)});
      i = j;
    } else if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, c)});
      ++i;
    } else {
      fail(ErrorKind::Parse, std::string("unexpected character '") + c + "' in '" + s + "'");
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text), tokens_(tokenize(text)) {}

  MonomialSum parse_all() {
    MonomialSum s = sum();
    if (peek().kind != Token::End) error("unexpected '" + peek().text + "'");
    return s;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(const char* op) {
    if (peek().kind == Token::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const char* op) {
    if (!accept(op)) error(std::string("expected '") + op + "'");
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Parse, msg + " in '" + text_ + "'");
  }

  MonomialSum sum() {
    bool neg = false;
    if (accept("-")) {
      neg = true;
    } else {
      accept("+");
    }
    MonomialSum total = term();
    if (neg) total = -total;
    while (true) {
      if (accept("+")) {
        total += term();
      } else if (accept("-")) {
        total -= term();
      } else {
        break;
      }
    }
    return total;
  }

  MonomialSum term() {
    MonomialSum prod = factor();
    while (true) {
      if (accept("*")) {
        prod = prod * factor();
      } else if (accept("/")) {
        prod = prod * invert(factor());
      } else {
        break;
      }
    }
    return prod;
  }

  MonomialSum invert(const MonomialSum& f) const {
    if (f.terms().size() != 1 || !f.terms()[0].coeff.is_monomial()) {
      error("can only divide by a single monomial");
    }
    Monomial m = f.terms()[0];
    m.coeff = Poly(1).divide_by_monomial(m.coeff);
    for (auto& e : m.exps) e = -e;
    return MonomialSum(m);
  }

  MonomialSum factor() {
    const Token tok = peek();
    if (tok.kind == Token::Number) {
      ++pos_;
      return MonomialSum::constant(Poly(Rational::parse(tok.text)));
    }
    if (accept("(")) {
      MonomialSum inner = sum();
      expect(")");
      return inner;
    }
    if (tok.kind != Token::Name) error("expected a factor");
    ++pos_;
    const std::string& name = tok.text;
    const bool is_var = name == "r" || name == "z" || name == "tau";
    if (name == "t") error("time enters only through tau = T* - t; use 'tau'");
    LinearForm expo(Rational(1));
    if (accept("^")) expo = exponent();
    if (is_var) {
      Monomial m{Poly(1), {}};
      const int slot = name == "r" ? 0 : (name == "z" ? 1 : 2);
      m.exps[slot] = expo;
      return MonomialSum(m);
    }
    if (!expo.is_constant() || !expo.constant().is_integer()) {
      fail(ErrorKind::UnsupportedForm,
           "coefficient symbol '" + name + "' needs an integer exponent");
    }
    return MonomialSum::constant(Poly::symbol(name, static_cast<int>(expo.constant().num())));
  }

  LinearForm exponent() {
    if (accept("(")) {
      LinearForm f = linear();
      expect(")");
      return f;
    }
    bool neg = false;
    if (accept("-")) {
      neg = true;
    } else {
      accept("+");
    }
    LinearForm f = linear_atom_simple();
    return neg ? -f : f;
  }

  LinearForm linear_atom_simple() {
    const Token tok = peek();
    if (tok.kind == Token::Number) {
      ++pos_;
      return LinearForm(Rational::parse(tok.text));
    }
    if (tok.kind == Token::Name) {
      ++pos_;
      return LinearForm::symbol(tok.text);
    }
    error("expected an exponent");
  }

  LinearForm linear() {
    bool neg = false;
    if (accept("-")) {
      neg = true;
    } else {
      accept("+");
    }
    LinearForm total = linear_term();
    if (neg) total = -total;
    while (true) {
      if (accept("+")) {
        total += linear_term();
      } else if (accept("-")) {
        total -= linear_term();
      } else {
        break;
      }
    }
    return total;
  }

  LinearForm linear_term() {
    LinearForm prod = linear_atom();
    while (true) {
      if (accept("*")) {
        LinearForm rhs = linear_atom();
        if (!prod.is_constant() && !rhs.is_constant()) {
          fail(ErrorKind::UnsupportedForm, "exponent is nonlinear in its unknowns: '" + text_ + "'");
        }
        prod = prod.is_constant() ? rhs * prod.constant() : prod * rhs.constant();
      } else if (accept("/")) {
        LinearForm rhs = linear_atom();
        if (!rhs.is_constant()) {
          fail(ErrorKind::UnsupportedForm, "exponent divides by an unknown: '" + text_ + "'");
        }
        prod = prod * (Rational(1) / rhs.constant());
      } else {
        break;
      }
    }
    return prod;
  }

  LinearForm linear_atom() {
    if (accept("(")) {
      LinearForm f = linear();
      expect(")");
      return f;
    }
    if (accept("-")) return -linear_atom();
    return linear_atom_simple();
  }

  std::string text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialSum MonomialSum::parse(const std::string& text) { return Parser(text).parse_all(); }

}  // namespace eulerlab
