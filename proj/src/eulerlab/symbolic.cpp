#include "eulerlab/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "eulerlab/error.hpp"

namespace eulerlab {

// ---------------------------------------------------------------------------
// LinearForm

LinearForm LinearForm::symbol(const std::string& name) {
  LinearForm f;
  f.coeffs_[name] = Rational(1);
  return f;
}

Rational LinearForm::coeff(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::set<std::string> LinearForm::symbols() const {
  std::set<std::string> out;
  for (const auto& [name, c] : coeffs_) out.insert(name);
  return out;
}

void LinearForm::prune() {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (const auto& [name, c] : o.coeffs_) coeffs_[name] += c;
  prune();
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += -o; }

LinearForm& LinearForm::operator*=(const Rational& s) {
  constant_ *= s;
  for (auto& [name, c] : coeffs_) c *= s;
  prune();
  return *this;
}

LinearForm LinearForm::substitute(const std::string& name, const LinearForm& value) const {
  auto it = coeffs_.find(name);
  if (it == coeffs_.end()) return *this;
  LinearForm out = *this;
  const Rational c = it->second;
  out.coeffs_.erase(name);
  out += value * c;
  return out;
}

double LinearForm::evaluate(const SymbolValues& values) const {
  double v = constant_.to_double();
  for (const auto& [name, c] : coeffs_) {
    auto it = values.find(name);
    if (it == values.end()) fail(ErrorKind::MissingField, "no value for symbol '" + name + "'");
    v += c.to_double() * it->second;
  }
  return v;
}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
  if (auto c = a.constant_ <=> b.constant_; c != 0) return c;
  auto ia = a.coeffs_.begin();
  auto ib = b.coeffs_.begin();
  for (; ia != a.coeffs_.end() && ib != b.coeffs_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  if (ia == a.coeffs_.end() && ib == b.coeffs_.end()) return std::strong_ordering::equal;
  return ia == a.coeffs_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string LinearForm::str() const {
  std::string out;
  for (const auto& [name, c] : coeffs_) {
    const bool neg = c < Rational(0);
    const Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += name;
  }
  if (!constant_.is_zero() || out.empty()) {
    const bool neg = constant_ < Rational(0);
    if (out.empty()) {
      out += constant_.str();
    } else {
      out += (neg ? " - " : " + ") + (neg ? (-constant_).str() : constant_.str());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(Rational c) {
  if (!c.is_zero()) terms_[{}] = c;
}

Poly Poly::symbol(const std::string& name, int power) {
  Poly p;
  if (power == 0) {
    p.terms_[{}] = Rational(1);
  } else {
    p.terms_[{{name, power}}] = Rational(1);
  }
  return p;
}

Poly Poly::from_linear(const LinearForm& form) {
  Poly p(form.constant());
  for (const auto& [name, c] : form.coeffs()) p += Poly::symbol(name) * Poly(c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> Poly::symbols() const {
  std::set<std::string> out;
  for (const auto& [pp, c] : terms_) {
    for (const auto& [name, e] : pp) out.insert(name);
  }
  return out;
}

bool Poly::contains(const std::string& name) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return kv.first.count(name) != 0; });
}

int Poly::max_degree(const std::string& name) const {
  int best = std::numeric_limits<int>::min();
  for (const auto& [pp, c] : terms_) {
    auto it = pp.find(name);
    best = std::max(best, it == pp.end() ? 0 : it->second);
  }
  return terms_.empty() ? 0 : best;
}

int Poly::min_degree(const std::string& name) const {
  int best = std::numeric_limits<int>::max();
  for (const auto& [pp, c] : terms_) {
    auto it = pp.find(name);
    best = std::min(best, it == pp.end() ? 0 : it->second);
  }
  return terms_.empty() ? 0 : best;
}

Poly Poly::coefficient(const std::string& name, int power) const {
  Poly out;
  for (const auto& [pp, c] : terms_) {
    auto it = pp.find(name);
    const int e = it == pp.end() ? 0 : it->second;
    if (e != power) continue;
    PowerProduct rest = pp;
    rest.erase(name);
    out.add_term(rest, c);
  }
  return out;
}

void Poly::add_term(const PowerProduct& pp, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(pp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [pp, c] : o.terms_) add_term(pp, c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [pp, c] : terms_) out.terms_[pp] = -c;
  return out;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  Poly out;
  for (const auto& [pa, ca] : terms_) {
    for (const auto& [pb, cb] : o.terms_) {
      PowerProduct pp = pa;
      for (const auto& [name, e] : pb) {
        const int sum = (pp.count(name) ? pp[name] : 0) + e;
        if (sum == 0) {
          pp.erase(name);
        } else {
          pp[name] = sum;
        }
      }
      out.add_term(pp, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Poly Poly::divide_by_monomial(const Poly& monomial) const {
  if (!monomial.is_monomial()) fail(ErrorKind::UnsupportedForm, "division by a non-monomial");
  const auto& [pp, c] = *monomial.terms_.begin();
  Poly inverse;
  PowerProduct inv;
  for (const auto& [name, e] : pp) inv[name] = -e;
  inverse.terms_[inv] = Rational(1) / c;
  return *this * inverse;
}

Poly Poly::substitute(const std::string& name, const Poly& value) const {
  if (!contains(name)) return *this;
  const int lo = min_degree(name);
  if (lo < 0 && !value.is_monomial()) {
    fail(ErrorKind::UnsupportedForm,
         "cannot substitute a multi-term value for '" + name + "' under a negative power");
  }
  if (lo < 0 && value.is_zero()) {
    fail(ErrorKind::Domain, "substituting zero for '" + name + "' under a negative power");
  }
  Poly inverse;
  if (lo < 0) inverse = Poly(1).divide_by_monomial(value);
  Poly out;
  for (const auto& [pp, c] : terms_) {
    auto it = pp.find(name);
    if (it == pp.end()) {
      out.add_term(pp, c);
      continue;
    }
    const int e = it->second;
    PowerProduct rest = pp;
    rest.erase(name);
    Poly term;
    term.terms_[rest] = c;
    const Poly& base = e > 0 ? value : inverse;
    for (int i = 0; i < std::abs(e); ++i) term *= base;
    out += term;
  }
  return out;
}

std::optional<LinearForm> Poly::to_linear() const {
  LinearForm out;
  for (const auto& [pp, c] : terms_) {
    if (pp.empty()) {
      out += LinearForm(c);
    } else if (pp.size() == 1 && pp.begin()->second == 1) {
      out += LinearForm::symbol(pp.begin()->first) * c;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

double Poly::evaluate(const SymbolValues& values) const {
  double total = 0.0;
  for (const auto& [pp, c] : terms_) {
    double v = c.to_double();
    for (const auto& [name, e] : pp) {
      auto it = values.find(name);
      if (it == values.end()) fail(ErrorKind::MissingField, "no value for symbol '" + name + "'");
      v *= std::pow(it->second, e);
    }
    total += v;
  }
  return total;
}

namespace {

int total_positive_degree(const PowerProduct& pp) {
  int d = 0;
  for (const auto& [name, e] : pp) d += std::abs(e);
  return d;
}

std::string product_str(const PowerProduct& pp, const Rational& mag) {
  std::string num;
  std::string den;
  auto append = [](std::string& s, const std::string& factor) {
    if (!s.empty()) s += "*";
    s += factor;
  };
  for (const auto& [name, e] : pp) {
    const std::string f = std::abs(e) == 1 ? name : name + "^" + std::to_string(std::abs(e));
    append(e > 0 ? num : den, f);
  }
  if (mag.num() != 1 || num.empty()) {
    const std::string n = std::to_string(mag.num());
    num = num.empty() ? n : n + "*" + num;
  }
  if (mag.den() != 1) {
    const std::string d = std::to_string(mag.den());
    den = den.empty() ? d : d + "*" + den;
  }
  if (den.empty()) return num;
  const bool compound = den.find('*') != std::string::npos;
  return num + "/" + (compound ? "(" + den + ")" : den);
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // Polynomial part by descending degree, then the constant, then terms with
  // negative powers.
  auto rank = [](const PowerProduct& pp) {
    if (pp.empty()) return 1;
    const bool neg = std::any_of(pp.begin(), pp.end(), [](const auto& e) { return e.second < 0; });
    return neg ? 2 : 0;
  };
  std::vector<std::pair<PowerProduct, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
    if (rank(x.first) != rank(y.first)) return rank(x.first) < rank(y.first);
    return total_positive_degree(x.first) > total_positive_degree(y.first);
  });
  const bool all_negative = std::all_of(ordered.begin(), ordered.end(),
                                        [](const auto& kv) { return kv.second < Rational(0); });
  const bool wrap = all_negative && ordered.size() > 1;
  std::string out;
  for (const auto& [pp, c] : ordered) {
    const Rational shown = wrap ? -c : c;
    const bool neg = shown < Rational(0);
    const Rational mag = neg ? -shown : shown;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += product_str(pp, mag);
  }
  return wrap ? "-(" + out + ")" : out;
}

Poly strip_nonzero_content(const Poly& p, const std::set<std::string>& nonzero) {
  if (p.is_zero()) return p;
  PowerProduct content;
  for (const auto& name : nonzero) {
    if (!p.contains(name)) continue;
    const int lo = p.min_degree(name);
    if (lo != 0) content[name] = lo;
  }
  if (content.empty()) return p;
  Poly divisor(1);
  for (const auto& [name, e] : content) divisor *= Poly::symbol(name, e);
  return p.divide_by_monomial(divisor);
}

}  // namespace eulerlab
