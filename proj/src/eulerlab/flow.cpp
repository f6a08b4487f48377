#include "eulerlab/flow.hpp"

namespace eulerlab {

double AxisymmetricFlow::stream(const CylArgs&) const {
  fail(ErrorKind::Variant, name() + " has no stream function");
}
CylJet AxisymmetricFlow::stream(const CylJetArgs&) const {
  fail(ErrorKind::Variant, name() + " has no stream function");
}
double AxisymmetricFlow::pressure(const CartArgs&) const {
  fail(ErrorKind::Variant, name() + " has no pressure");
}
CartJet AxisymmetricFlow::pressure(const CartJetArgs&) const {
  fail(ErrorKind::Variant, name() + " has no pressure");
}
CartJetQ AxisymmetricFlow::pressure(const CartJetQArgs&) const {
  fail(ErrorKind::Variant, name() + " has no pressure");
}

ExactFlow::ExactFlow(const SolutionParams& params) : params_(params) { params_.validate(); }

std::string ExactFlow::name() const { return to_string(params_.variant); }

PowerLawConstants PowerLawConstants::from(const SolutionParams& p) {
  if (p.variant != Variant::EulerSelfSimilar) {
    fail(ErrorKind::Variant, "power-law constants describe the Euler family only");
  }
  return {p.a, 1.0, -2.0 * p.a, 1.0, p.k, p.swirl_exponent()};
}

const char* PowerLawConstants::label(int i) {
  static constexpr const char* names[kCount] = {"vr coefficient", "vr exponent",
                                                "vz coefficient", "vz exponent",
                                                "vtheta coefficient", "vtheta exponent"};
  if (i < 0 || i >= kCount) fail(ErrorKind::Param, "constant index out of range");
  return names[i];
}

double& PowerLawConstants::operator[](int i) {
  switch (i) {
    case 0: return cr;
    case 1: return er;
    case 2: return cz;
    case 3: return ez;
    case 4: return ct;
    case 5: return et;
    default: fail(ErrorKind::Param, "constant index out of range");
  }
}

PowerLawFlow::PowerLawFlow(const PowerLawConstants& c, const SolutionParams& reference)
    : c_(c), ref_(reference) {
  ref_.validate();
}

namespace {

const MonomialSum& role(const FieldMap& fields, const std::string& name) {
  auto it = fields.find(name);
  if (it == fields.end()) fail(ErrorKind::MissingField, "monomial flow needs field '" + name + "'");
  return it->second;
}

}  // namespace

MonomialFlow::MonomialFlow(const FieldMap& fields, const SymbolValues& values,
                           const SolutionParams& reference)
    : vr_(role(fields, "vr")),
      vtheta_(role(fields, "vtheta")),
      vz_(role(fields, "vz")),
      values_(values),
      ref_(reference) {
  ref_.validate();
  if (auto it = fields.find("psi"); it != fields.end()) {
    psi_ = it->second;
    has_psi_ = true;
  }
}

double MonomialFlow::stream(const CylArgs& x) const {
  if (!has_psi_) return AxisymmetricFlow::stream(x);
  return psi_.evaluate(values_, ref_.t_star, x[0], x[1], x[2]);
}

CylJet MonomialFlow::stream(const CylJetArgs& x) const {
  if (!has_psi_) return AxisymmetricFlow::stream(x);
  return psi_.evaluate(values_, ref_.t_star, x[0], x[1], x[2]);
}

}  // namespace eulerlab
