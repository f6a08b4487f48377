#include "eulerlab/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eulerlab/quadrature.hpp"
#include "eulerlab/report_json.hpp"
#include "eulerlab/rng.hpp"

namespace eulerlab {

const char* to_string(EquationId id) noexcept {
  switch (id) {
    case EquationId::SwirlTransport: return "SwirlTransport";
    case EquationId::VorticityTransport: return "VorticityTransport";
    case EquationId::StreamPoisson: return "StreamPoisson";
    case EquationId::BiotSavart: return "BiotSavart";
    case EquationId::Incompressibility: return "Incompressibility";
    case EquationId::CartesianMomentum: return "CartesianMomentum";
    case EquationId::NSSwirlMomentum: return "NSSwirlMomentum";
    case EquationId::PressurePoisson: return "PressurePoisson";
  }
  return "?";
}

EquationId parse_equation_id(const std::string& text) {
  for (EquationId id : {EquationId::SwirlTransport, EquationId::VorticityTransport,
                        EquationId::StreamPoisson, EquationId::BiotSavart,
                        EquationId::Incompressibility, EquationId::CartesianMomentum,
                        EquationId::NSSwirlMomentum, EquationId::PressurePoisson}) {
    if (text == to_string(id)) return id;
  }
  fail(ErrorKind::Config, "unknown equation '" + text + "'");
}

std::vector<EquationId> euler_equations() {
  return {EquationId::SwirlTransport, EquationId::VorticityTransport, EquationId::StreamPoisson,
          EquationId::BiotSavart, EquationId::Incompressibility, EquationId::CartesianMomentum};
}

std::vector<EquationId> ns_equations() {
  return {EquationId::Incompressibility, EquationId::NSSwirlMomentum,
          EquationId::CartesianMomentum};
}

std::vector<EquationId> applicable_equations(const AxisymmetricFlow& flow) {
  std::vector<EquationId> out{EquationId::SwirlTransport, EquationId::VorticityTransport};
  if (flow.has_stream()) {
    out.push_back(EquationId::StreamPoisson);
    out.push_back(EquationId::BiotSavart);
  }
  out.push_back(EquationId::Incompressibility);
  if (flow.has_pressure()) out.push_back(EquationId::CartesianMomentum);
  if (flow.navier_stokes()) out.push_back(EquationId::NSSwirlMomentum);
  if (flow.has_pressure()) out.push_back(EquationId::PressurePoisson);
  return out;
}

double ResidualValue::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < size; ++i) m = std::max(m, std::abs(components[i]));
  return m;
}

namespace {

// Sums terms in the scalar type S while remembering the largest one.
template <class S = double>
struct Acc {
  S sum = 0;
  double largest = 0.0;
  void add(S v) {
    sum += v;
    largest = std::max(largest, static_cast<double>(scalar::abs(v)));
  }
  double value() const { return static_cast<double>(sum); }
};

template <std::size_t N>
std::array<Jet2<N, Quad>, N> seed_quad(const std::array<double, N>& x) {
  std::array<Jet2<N, Quad>, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = Jet2<N, Quad>::variable(x[i], i);
  return out;
}

CylVec<CylJet> cyl_jets(const AxisymmetricFlow& f, const CylArgs& x, const DiffConfig& d) {
  if (d.mode == DiffMode::ExactJet) return f.cyl(seed<3>(x));
  return {jet_eval<3>([&](const auto& y) { return f.cyl(y).vr; }, x, d),
          jet_eval<3>([&](const auto& y) { return f.cyl(y).vtheta; }, x, d),
          jet_eval<3>([&](const auto& y) { return f.cyl(y).vz; }, x, d)};
}

CylJet stream_jet(const AxisymmetricFlow& f, const CylArgs& x, const DiffConfig& d) {
  return jet_eval<3>([&](const auto& y) { return f.stream(y); }, x, d);
}

CartVec<CartJet> cart_jets(const AxisymmetricFlow& f, const CartArgs& x, const DiffConfig& d) {
  if (d.mode == DiffMode::ExactJet) return f.cart(seed<4>(x));
  return {jet_eval<4>([&](const auto& y) { return f.cart(y)[0]; }, x, d),
          jet_eval<4>([&](const auto& y) { return f.cart(y)[1]; }, x, d),
          jet_eval<4>([&](const auto& y) { return f.cart(y)[2]; }, x, d)};
}

CartJet pressure_jet(const AxisymmetricFlow& f, const CartArgs& x, const DiffConfig& d) {
  return jet_eval<4>([&](const auto& y) { return f.pressure(y); }, x, d);
}

void check_point(const AxisymmetricFlow& flow, const SamplePoint& pt) {
  if (!std::isfinite(pt.t) || pt.t < 0.0 || !(pt.t < flow.t_star())) {
    fail(ErrorKind::Domain, "t must lie in [0, t_star)");
  }
  if (!(pt.r > 0.0) || !std::isfinite(pt.r)) fail(ErrorKind::Domain, "r must be positive");
  if (!std::isfinite(pt.z) || !std::isfinite(pt.theta)) fail(ErrorKind::Domain, "non-finite point");
}

void require_stream(const AxisymmetricFlow& flow, EquationId eq) {
  if (!flow.has_stream()) {
    fail(ErrorKind::Variant, std::string(to_string(eq)) + " needs a stream function, which " +
                                 flow.name() + " does not have");
  }
}

void require_pressure(const AxisymmetricFlow& flow, EquationId eq) {
  if (!flow.has_pressure()) {
    fail(ErrorKind::Variant,
         std::string(to_string(eq)) + " needs a pressure, which " + flow.name() + " does not have");
  }
}

CartArgs cart_point(const SamplePoint& pt) {
  return {pt.t, pt.r * std::cos(pt.theta), pt.r * std::sin(pt.theta), pt.z};
}

// d_t vtheta + vr d_r vtheta + vz d_z vtheta + vr vtheta / r, minus
// nu (Lap - 1/r^2) vtheta when nu != 0.
template <class J>
ResidualValue swirl_residual(const CylVec<J>& v, double r, double nu) {
  using namespace cyl;
  const J& w = v.vtheta;
  Acc<typename J::Scalar> acc;
  acc.add(w.d(T));
  acc.add(v.vr.value * w.d(R));
  acc.add(v.vz.value * w.d(Z));
  acc.add(v.vr.value * w.value / r);
  if (nu != 0.0) {
    acc.add(-nu * w.dd(R, R));
    acc.add(-nu * w.d(R) / r);
    acc.add(-nu * w.dd(Z, Z));
    acc.add(nu * (w.value / r) / r);
  }
  return {{acc.value(), 0.0, 0.0}, 1, acc.largest};
}

template <class J>
ResidualValue vorticity_residual(const CylVec<J>& v, double r) {
  using namespace cyl;
  using S = typename J::Scalar;
  const S omega = v.vr.d(Z) - v.vz.d(R);
  const S omega_t = v.vr.dd(Z, T) - v.vz.dd(R, T);
  const S omega_r = v.vr.dd(Z, R) - v.vz.dd(R, R);
  const S omega_z = v.vr.dd(Z, Z) - v.vz.dd(R, Z);
  Acc<S> acc;
  acc.add(omega_t);
  acc.add(v.vr.value * omega_r);
  acc.add(v.vz.value * omega_z);
  acc.add(-2.0 / r * v.vtheta.value * v.vtheta.d(Z));
  acc.add(-v.vr.value * omega / r);
  return {{acc.value(), 0.0, 0.0}, 1, acc.largest};
}

template <class J>
ResidualValue incompressibility_residual(const CylVec<J>& v, double r) {
  using namespace cyl;
  Acc<typename J::Scalar> acc;
  acc.add(v.vr.value);
  acc.add(r * v.vr.d(R));
  acc.add(r * v.vz.d(Z));
  return {{acc.value(), 0.0, 0.0}, 1, acc.largest};
}

// Exact jets are evaluated in quad precision, difference quotients in double.
template <class F>
ResidualValue with_cyl(const AxisymmetricFlow& flow, const CylArgs& x, const DiffConfig& d,
                       const F& f) {
  if (d.mode == DiffMode::ExactJet) return f(flow.cyl(seed_quad<3>(x)));
  return f(cyl_jets(flow, x, d));
}

// d_t v_i + v_j d_j v_i + d_i P - nu Lap v_i, accumulated in the jets' scalar type.
template <class J>
ResidualValue momentum_residual(const CartVec<J>& v, const J& p, double nu) {
  using S = typename J::Scalar;
  ResidualValue out;
  out.size = 3;
  for (std::size_t i = 0; i < 3; ++i) {
    S sum = 0;
    double largest = 0.0;
    auto add = [&](S term) {
      sum += term;
      largest = std::max(largest, static_cast<double>(scalar::abs(term)));
    };
    add(v[i].d(cart::T));
    for (std::size_t j = 0; j < 3; ++j) add(v[j].value * v[i].d(1 + j));
    add(p.d(1 + i));
    if (nu != 0.0) {
      for (std::size_t j = 1; j <= 3; ++j) add(-nu * v[i].dd(j, j));
    }
    out.components[i] = static_cast<double>(sum);
    out.largest_term = std::max(out.largest_term, largest);
  }
  return out;
}

// -Lap P - (d_j v_i)(d_i v_j)
template <class J>
ResidualValue poisson_residual(const CartVec<J>& v, const J& p) {
  using S = typename J::Scalar;
  S sum = 0;
  double largest = 0.0;
  auto add = [&](S term) {
    sum += term;
    largest = std::max(largest, static_cast<double>(scalar::abs(term)));
  };
  for (std::size_t j = 1; j <= 3; ++j) add(-p.dd(j, j));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) add(-v[i].d(1 + j) * v[j].d(1 + i));
  }
  return {{static_cast<double>(sum), 0.0, 0.0}, 1, largest};
}

}  // namespace

ResidualValue residual_at(const AxisymmetricFlow& flow, EquationId eq, const SamplePoint& pt,
                          const DiffConfig& diff) {
  using namespace cyl;
  check_point(flow, pt);
  diff.validate();
  const CylArgs x{pt.t, pt.r, pt.z};
  const double r = pt.r;

  switch (eq) {
    case EquationId::SwirlTransport:
      return with_cyl(flow, x, diff, [&](const auto& v) { return swirl_residual(v, r, 0.0); });

    case EquationId::NSSwirlMomentum:
      if (!flow.navier_stokes()) {
        fail(ErrorKind::Variant, "NSSwirlMomentum applies to the Navier-Stokes variants only");
      }
      return with_cyl(flow, x, diff,
                      [&](const auto& v) { return swirl_residual(v, r, flow.nu()); });

    case EquationId::VorticityTransport:
      return with_cyl(flow, x, diff, [&](const auto& v) { return vorticity_residual(v, r); });

    case EquationId::StreamPoisson: {
      require_stream(flow, eq);
      const auto v = cyl_jets(flow, x, diff);
      const CylJet psi = stream_jet(flow, x, diff);
      Acc<> acc;
      acc.add(-psi.dd(R, R));
      acc.add(-psi.d(R) / r);
      acc.add(-psi.dd(Z, Z));
      acc.add(psi.value / (r * r));
      acc.add(-v.vr.d(Z));
      acc.add(v.vz.d(R));
      return {{acc.value(), 0.0, 0.0}, 1, acc.largest};
    }

    case EquationId::BiotSavart: {
      require_stream(flow, eq);
      const auto v = cyl_jets(flow, x, diff);
      const CylJet psi = stream_jet(flow, x, diff);
      const double terms[] = {v.vr.value, psi.d(Z), v.vz.value, psi.value / r, psi.d(R)};
      double largest = 0.0;
      for (double t : terms) largest = std::max(largest, std::abs(t));
      return {{v.vr.value + psi.d(Z), v.vz.value - psi.value / r - psi.d(R), 0.0}, 2, largest};
    }

    case EquationId::Incompressibility:
      return with_cyl(flow, x, diff,
                      [&](const auto& v) { return incompressibility_residual(v, r); });

    case EquationId::CartesianMomentum: {
      require_pressure(flow, eq);
      const CartArgs y = cart_point(pt);
      if (diff.mode == DiffMode::ExactJet) {
        const auto xl = seed_quad<4>(y);
        return momentum_residual(flow.cart(xl), flow.pressure(xl), flow.nu());
      }
      return momentum_residual(cart_jets(flow, y, diff), pressure_jet(flow, y, diff), flow.nu());
    }

    case EquationId::PressurePoisson: {
      require_pressure(flow, eq);
      const CartArgs y = cart_point(pt);
      if (diff.mode == DiffMode::ExactJet) {
        const auto xl = seed_quad<4>(y);
        return poisson_residual(flow.cart(xl), flow.pressure(xl));
      }
      return poisson_residual(cart_jets(flow, y, diff), pressure_jet(flow, y, diff));
    }
  }
  fail(ErrorKind::Config, "unknown equation");
}

ResidualValue residual_at(const SolutionParams& params, EquationId eq, const SamplePoint& pt,
                          const DiffConfig& diff) {
  return residual_at(ExactFlow(params), eq, pt, diff);
}

double pressure_poisson_check(const AxisymmetricFlow& flow, const SamplePoint& pt,
                              const DiffConfig& diff) {
  return residual_at(flow, EquationId::PressurePoisson, pt, diff).components[0];
}

double pressure_poisson_check(const SolutionParams& params, const SamplePoint& pt,
                              const DiffConfig& diff) {
  return pressure_poisson_check(ExactFlow(params), pt, diff);
}

// ---------------------------------------------------------------------------
// Sampling and reports

SamplingSpec SamplingSpec::standard(double t_star, int count, std::uint64_t seed) {
  SamplingSpec s;
  s.t_hi = 0.8 * t_star;
  s.count = count;
  s.seed = seed;
  return s;
}

void SamplingSpec::validate(double t_star) const {
  if (!(r_lo > 0.0)) fail(ErrorKind::Param, "r_lo must be positive");
  if (!(r_hi > r_lo)) fail(ErrorKind::Param, "r_hi must exceed r_lo");
  if (!(z_hi >= z_lo)) fail(ErrorKind::Param, "z_hi must not be below z_lo");
  if (!(t_hi >= 0.0) || !(t_hi < t_star)) fail(ErrorKind::Param, "t_hi must lie in [0, t_star)");
  if (count <= 0) fail(ErrorKind::Param, "sample count must be positive");
}

std::vector<SamplePoint> SamplingSpec::draw() const {
  Rng rng(seed);
  std::vector<SamplePoint> pts(static_cast<std::size_t>(count));
  for (auto& p : pts) {
    p.t = rng.uniform(0.0, t_hi);
    p.r = rng.uniform(r_lo, r_hi);
    p.z = rng.uniform(z_lo, z_hi);
    p.theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  }
  return pts;
}

const EquationResult& ResidualReport::find(EquationId id) const {
  for (const auto& e : equations) {
    if (e.equation == id) return e;
  }
  fail(ErrorKind::Config, std::string("equation ") + to_string(id) + " not in report");
}

std::string ResidualReport::to_json() const { return to_json_value(*this).dump(2); }

ResidualReport verify(const AxisymmetricFlow& flow, const std::vector<EquationId>& eqs,
                      const SamplingSpec& sampling, double tol, const DiffConfig& diff) {
  sampling.validate(flow.t_star());
  diff.validate();
  if (!(tol >= 0.0)) fail(ErrorKind::Param, "tolerance must be non-negative");
  ResidualReport report;
  report.flow = flow.name();
  report.sampling = sampling;
  report.tol = tol;
  report.diff = diff;
  const auto pts = sampling.draw();
  for (EquationId eq : eqs) {
    EquationResult res;
    res.equation = eq;
    for (const auto& pt : pts) {
      const ResidualValue v = residual_at(flow, eq, pt, diff);
      const double m = v.max_abs();
      const bool first_nan = std::isnan(m) && !std::isnan(res.max_abs_residual);
      if (res.samples == 0 || m > res.max_abs_residual || first_nan) {
        res.max_abs_residual = m;
        res.argmax = pt;
      }
      res.largest_term = std::max(res.largest_term, v.largest_term);
      ++res.samples;
    }
    res.pass = res.max_abs_residual <= tol;
    report.pass = report.pass && res.pass;
    report.equations.push_back(res);
  }
  return report;
}

ResidualReport verify(const SolutionParams& params, const std::vector<EquationId>& eqs,
                      const SamplingSpec& sampling, double tol, const DiffConfig& diff) {
  ResidualReport report = verify(ExactFlow(params), eqs, sampling, tol, diff);
  report.params = params;
  return report;
}

// ---------------------------------------------------------------------------
// Truncated-domain energy

double energy_ball(const SolutionParams& params, double t, const EnergyRegion& region) {
  params.validate();
  if (!(region.eps > 0.0)) fail(ErrorKind::Domain, "inner radius must be positive");
  if (!(region.R > region.eps)) fail(ErrorKind::Domain, "outer radius must exceed inner radius");
  if (!std::isfinite(t) || t < 0.0 || !(t < params.t_star)) {
    fail(ErrorKind::Domain, "t must lie in [0, t_star)");
  }
  const GaussLegendre rule(region.order);
  int panels = region.panels;
  if (panels <= 0) panels = std::max(1, static_cast<int>(std::ceil(std::log2(region.R / region.eps))));
  const double ratio = std::pow(region.R / region.eps, 1.0 / panels);

  double total = 0.0;
  double lo = region.eps;
  for (int p = 0; p < panels; ++p) {
    const double hi = p + 1 == panels ? region.R : lo * ratio;
    total += rule.integrate(
        [&](double r) {
          const double inner = rule.integrate(
              [&](double z) {
                const auto v = velocity_cyl(params, t, r, z);
                return v.vr * v.vr + v.vtheta * v.vtheta + v.vz * v.vz;
              },
              -region.R, region.R);
          return inner * r;
        },
        lo, hi);
    lo = hi;
  }
  return 2.0 * std::numbers::pi * total;
}

}  // namespace eulerlab
