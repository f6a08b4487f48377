#include "eulerlab/runner.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulerlab/characteristics.hpp"
#include "eulerlab/derivation.hpp"
#include "eulerlab/diagnostics.hpp"
#include "eulerlab/flow.hpp"
#include "eulerlab/report_json.hpp"
#include "eulerlab/residuals.hpp"

namespace eulerlab {

using nlohmann::json;

const char* library_version() noexcept { return "eulerlab 0.1.0"; }

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Derive: return "derive";
    case Command::Trace: return "trace";
    case Command::Simulate: return "simulate";
    case Command::Diagnose: return "diagnose";
    case Command::All: break;
  }
  return "all";
}

Command parse_command(const std::string& text) {
  for (Command c : {Command::Verify, Command::Derive, Command::Trace, Command::Simulate,
                    Command::Diagnose, Command::All}) {
    if (text == to_string(c)) return c;
  }
  fail(ErrorKind::Config, "unknown command '" + text + "'");
}

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys{
      {"a", "meridional strain rate a (nonzero)"},
      {"k", "swirl amplitude k (nonzero)"},
      {"t_star", "blowup time T* (positive)"},
      {"nu", "viscosity for the Navier-Stokes variants"},
      {"variant", "euler-selfsimilar | ns-inverse-r | ns-decaying-swirl"},
      {"r_lo", "region inner radius (positive)"},
      {"r_hi", "region outer radius"},
      {"z_lo", "region lower z"},
      {"z_hi", "region upper z"},
      {"nr", "grid nodes in r (>= 8)"},
      {"nz", "grid nodes in z (>= 8)"},
      {"cfl", "CFL number in (0, 1]"},
      {"t_end", "final time of trace and simulate (default 0.5 t_star)"},
      {"tol", "absolute residual tolerance"},
      {"seed", "seed of all sampling"},
      {"output_dir", "directory for report.json and CSV files"},
      {"samples", "residual sample points"},
      {"interpolation", "bilinear | biquadratic | bicubic"},
      {"backtrace", "midpoint | exact"},
      {"velocity", "exact | stream (meridional velocity source)"},
      {"elliptic_tol", "relative residual of the stream solve"},
      {"elliptic_max_iter", "iteration cap of the stream solve (0: 10 nr nz)"},
      {"sim_tol", "relative L-infinity bound of simulate"},
      {"diff_mode", "exact_jet | central_difference"},
      {"diff_h", "central-difference step"},
      {"trace_r0", "trajectory start r"},
      {"trace_z0", "trajectory start z"},
      {"trace_dt", "RK4 step"},
      {"derive_preset", "derivation preset (euler-selfsimilar)"},
      {"derive_a", "fixed rational a for derive, e.g. 1 or -1/2 (empty: symbolic)"},
  };
  return keys;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_real(const std::string& key, const std::string& v) {
  double out = 0.0;
  const char* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end || !std::isfinite(out)) {
    fail(ErrorKind::Config, "key '" + key + "' expects a number, got '" + v + "'");
  }
  return out;
}

template <class I>
I to_integer(const std::string& key, const std::string& v) {
  I out = 0;
  const char* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) {
    fail(ErrorKind::Config, "key '" + key + "' expects an integer, got '" + v + "'");
  }
  return out;
}

}  // namespace

void RunConfig::set(const std::string& key_in, const std::string& value_in) {
  const std::string key = trim(key_in);
  const std::string v = trim(value_in);
  auto real = [&] { return to_real(key, v); };
  auto integer = [&] { return to_integer<int>(key, v); };
  if (key == "a") params.a = real();
  else if (key == "k") params.k = real();
  else if (key == "t_star") params.t_star = real();
  else if (key == "nu") params.nu = real();
  else if (key == "variant") {
    try {
      params.variant = parse_variant(v);
    } catch (const Error& e) {
      fail(ErrorKind::Config, e.what());
    }
  } else if (key == "r_lo") grid.r_lo = real();
  else if (key == "r_hi") grid.r_hi = real();
  else if (key == "z_lo") grid.z_lo = real();
  else if (key == "z_hi") grid.z_hi = real();
  else if (key == "nr") grid.nr = integer();
  else if (key == "nz") grid.nz = integer();
  else if (key == "cfl") sim.cfl = real();
  else if (key == "t_end") t_end = real();
  else if (key == "tol") tol = real();
  else if (key == "seed") seed = to_integer<std::uint64_t>(key, v);
  else if (key == "output_dir") output_dir = v;
  else if (key == "samples") samples = integer();
  else if (key == "interpolation") {
    if (v == "bilinear") sim.interpolation = Interpolation::Bilinear;
    else if (v == "biquadratic") sim.interpolation = Interpolation::Biquadratic;
    else if (v == "bicubic") sim.interpolation = Interpolation::Bicubic;
    else fail(ErrorKind::Config, "unknown interpolation '" + v + "'");
  } else if (key == "backtrace") {
    if (v == "midpoint") sim.backtrace = Backtrace::Midpoint;
    else if (v == "exact") sim.backtrace = Backtrace::ExactFlowMap;
    else fail(ErrorKind::Config, "unknown backtrace '" + v + "'");
  } else if (key == "velocity") {
    if (v == "exact") sim.velocity = VelocitySource::ExactMeridional;
    else if (v == "stream") sim.velocity = VelocitySource::FromStream;
    else fail(ErrorKind::Config, "unknown velocity source '" + v + "'");
  } else if (key == "elliptic_tol") sim.elliptic.tol = real();
  else if (key == "elliptic_max_iter") sim.elliptic.max_iter = integer();
  else if (key == "sim_tol") sim_tol = real();
  else if (key == "diff_mode") {
    if (v == "exact_jet") diff.mode = DiffMode::ExactJet;
    else if (v == "central_difference") diff.mode = DiffMode::CentralDifference;
    else fail(ErrorKind::Config, "unknown diff_mode '" + v + "'");
  } else if (key == "diff_h") diff.h = real();
  else if (key == "trace_r0") trace_r0 = real();
  else if (key == "trace_z0") trace_z0 = real();
  else if (key == "trace_dt") trace_dt = real();
  else if (key == "derive_preset") derive_preset = v;
  else if (key == "derive_a") derive_a = v;
  else fail(ErrorKind::Config, "unknown config key '" + key + "'");
}

void RunConfig::load_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorKind::Config, "line " + std::to_string(n) + ": expected key = value");
    }
    set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Config, "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  load_text(buf.str());
}

void RunConfig::validate() const {
  params.validate();
  grid.validate();
  diff.validate();
  if (!(tol >= 0.0)) fail(ErrorKind::Param, "tol must be non-negative");
  if (samples <= 0) fail(ErrorKind::Param, "samples must be positive");
  if (!(sim_tol > 0.0)) fail(ErrorKind::Param, "sim_tol must be positive");
  if (!(trace_r0 > 0.0)) fail(ErrorKind::Param, "trace_r0 must be positive");
  if (!(trace_dt > 0.0)) fail(ErrorKind::Param, "trace_dt must be positive");
  SimConfig s = sim;
  s.t_end = resolved_t_end();
  s.validate(params.t_star);
  if (!derive_a.empty()) {
    try {
      Rational::parse(derive_a);
    } catch (const Error& e) {
      fail(ErrorKind::Config, std::string("derive_a: ") + e.what());
    }
  }
}

json RunConfig::to_json() const {
  return {{"params", to_json_value(params)},
          {"grid",
           {{"r_lo", grid.r_lo},
            {"r_hi", grid.r_hi},
            {"z_lo", grid.z_lo},
            {"z_hi", grid.z_hi},
            {"nr", grid.nr},
            {"nz", grid.nz}}},
          {"sim",
           {{"cfl", sim.cfl},
            {"t_end", resolved_t_end()},
            {"interpolation", to_string(sim.interpolation)},
            {"backtrace", to_string(sim.backtrace)},
            {"velocity", to_string(sim.velocity)},
            {"elliptic_tol", sim.elliptic.tol},
            {"elliptic_max_iter", sim.elliptic.max_iter},
            {"sim_tol", sim_tol}}},
          {"diff_mode", diff.mode == DiffMode::ExactJet ? "exact_jet" : "central_difference"},
          {"diff_h", diff.h},
          {"tol", tol},
          {"samples", samples},
          {"seed", seed},
          {"output_dir", output_dir},
          {"trace", {{"r0", trace_r0}, {"z0", trace_z0}, {"dt", trace_dt}}},
          {"derive", {{"preset", derive_preset}, {"a", derive_a}}}};
}

// ---------------------------------------------------------------------------

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Numerical breakdowns inside a check count as a failed check, not a bad config.
bool is_check_failure(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoConvergence:
    case ErrorKind::Step:
    case ErrorKind::FootOutsideDomain:
    case ErrorKind::CflViolation:
    case ErrorKind::DegenerateFit:
    case ErrorKind::UnsupportedForm:
    case ErrorKind::Overflow:
      return true;
    default:
      return false;
  }
}

struct Context {
  const RunConfig& cfg;
  RunResult& out;
  std::vector<std::pair<std::string, std::string>> csv;  // file name, contents

  void line(const std::string& s) { out.summary += s + "\n"; }
};

SamplingSpec sampling(const RunConfig& cfg) {
  SamplingSpec s = SamplingSpec::standard(cfg.params.t_star, cfg.samples, cfg.seed);
  s.r_lo = cfg.grid.r_lo;
  s.r_hi = cfg.grid.r_hi;
  s.z_lo = cfg.grid.z_lo;
  s.z_hi = cfg.grid.z_hi;
  return s;
}

bool run_verify(Context& cx) {
  const RunConfig& cfg = cx.cfg;
  const ExactFlow flow(cfg.params);
  const ResidualReport rep =
      verify(cfg.params, applicable_equations(flow), sampling(cfg), cfg.tol, cfg.diff);
  json& res = cx.out.report["residuals"];
  for (const auto& e : rep.equations) {
    res.push_back(to_json_value(e));
    cx.line(std::string("verify ") + to_string(e.equation) + ": max |residual| " +
            sci(e.max_abs_residual) + (e.pass ? " ok" : " FAIL"));
  }
  return rep.pass;
}

bool run_derive(Context& cx) {
  const RunConfig& cfg = cx.cfg;
  std::optional<Rational> a_value;
  if (!cfg.derive_a.empty()) a_value = Rational::parse(cfg.derive_a);
  const Derivation d = derive_preset(cfg.derive_preset, a_value);
  json j;
  j["preset"] = cfg.derive_preset;
  j["a"] = cfg.derive_a.empty() ? json("symbolic") : json(cfg.derive_a);
  bool pass = true;
  for (const auto& st : d.stages) {
    json s{{"name", st.name}, {"status", to_string(st.result.status)}};
    if (st.result.families.empty()) {
      s["violated"] = st.result.violated;
      pass = false;
    } else {
      s["solution"] = st.result.primary().str();
      json alt = json::array();
      for (std::size_t i = 1; i < st.result.families.size(); ++i) {
        alt.push_back(st.result.families[i].str());
      }
      s["alternatives"] = alt;
    }
    j["stages"].push_back(s);
  }
  for (const auto& as : d.assignments) j["assignments"][as.symbol] = as.value.str();
  for (const auto& [role, f] : d.fields) j["fields"][role] = f.str();
  j["concrete"] = d.concrete;
  cx.line("derive " + cfg.derive_preset + (cfg.derive_a.empty() ? "" : " a=" + cfg.derive_a));
  std::istringstream text(d.text());
  for (std::string l; std::getline(text, l);) cx.line("  " + l);

  if (a_value && d.concrete) {
    // The derived fields, evaluated numerically, must satisfy the equations.
    SolutionParams ref = cfg.params;
    ref.a = a_value->to_double();
    ref.variant = Variant::EulerSelfSimilar;
    const MonomialFlow flow(d.fields, {{"a", ref.a}, {"k", ref.k}}, ref);
    SamplingSpec region = sampling(cfg);
    region.t_hi = 0.8 * ref.t_star;
    const ResidualReport rep = verify(flow, applicable_equations(flow), region, cfg.tol, cfg.diff);
    json res = json::array();
    for (const auto& e : rep.equations) res.push_back(to_json_value(e));
    j["concrete_residuals"] = res;
    j["concrete_pass"] = rep.pass;
    cx.line(std::string("  concrete fields verified: ") + (rep.pass ? "ok" : "FAIL"));
    pass = pass && rep.pass;
  }
  j["pass"] = pass;
  cx.out.report["derivation"] = j;
  return pass;
}

bool run_trace(Context& cx) {
  const RunConfig& cfg = cx.cfg;
  const double t_end = cfg.resolved_t_end();
  const Trajectory num_traj =
      flow_numeric(cfg.params, 0.0, cfg.trace_r0, cfg.trace_z0, t_end, cfg.trace_dt);
  const int n = static_cast<int>(num_traj.samples.size()) - 1;
  const Trajectory exact = trace_closed_form(cfg.params, 0.0, cfg.trace_r0, cfg.trace_z0, t_end, n);
  const auto& last = num_traj.samples.back();
  const auto cf = flow_closed_form(cfg.params, 0.0, cfg.trace_r0, cfg.trace_z0, t_end);
  const double gap = std::max(std::abs(last.r - cf[0]), std::abs(last.z - cf[1]));
  const auto swirl_num = conserved_swirl(cfg.params, num_traj);
  const auto swirl_exact = conserved_swirl(cfg.params, exact);
  const double drift_num = max_drift(swirl_num);
  const double drift_exact = max_drift(swirl_exact);
  const bool pass = gap <= 1e-7 && drift_exact <= 1e-9 && drift_num <= 1e-7;

  std::string csv = "t,r,z,r_vtheta\n";
  for (std::size_t i = 0; i < num_traj.samples.size(); ++i) {
    const auto& s = num_traj.samples[i];
    csv += num(s.t) + "," + num(s.r) + "," + num(s.z) + "," + num(swirl_num[i]) + "\n";
  }
  cx.csv.emplace_back("trace.csv", std::move(csv));
  cx.out.report["trace"] = {{"origin", {{"t", 0.0}, {"r", cfg.trace_r0}, {"z", cfg.trace_z0}}},
                            {"t_end", t_end},
                            {"dt", cfg.trace_dt},
                            {"final_numeric", {{"r", last.r}, {"z", last.z}}},
                            {"final_closed_form", {{"r", cf[0]}, {"z", cf[1]}}},
                            {"max_position_gap", gap},
                            {"swirl_drift_closed_form", drift_exact},
                            {"swirl_drift_numeric", drift_num},
                            {"pass", pass}};
  cx.line("trace: RK4 vs closed form " + sci(gap) + ", r vtheta drift " + sci(drift_exact) +
          " (closed) " + sci(drift_num) + " (RK4)" + (pass ? " ok" : " FAIL"));
  return pass;
}

bool run_simulate(Context& cx) {
  const RunConfig& cfg = cx.cfg;
  const SolutionParams& p = cfg.params;
  SimConfig sim = cfg.sim;
  sim.t_end = cfg.resolved_t_end();

  std::vector<AnnulusGrid> levels{cfg.grid};
  if ((cfg.grid.nr - 1) % 2 == 0 && (cfg.grid.nz - 1) % 2 == 0 && (cfg.grid.nr - 1) / 2 + 1 >= 8 &&
      (cfg.grid.nz - 1) / 2 + 1 >= 8) {
    AnnulusGrid coarse = cfg.grid;
    coarse.nr = (cfg.grid.nr - 1) / 2 + 1;
    coarse.nz = (cfg.grid.nz - 1) / 2 + 1;
    levels.insert(levels.begin(), coarse);
  }
  json table = json::array();
  std::vector<double> errs, hs;
  double rel_fine = 0.0;
  AdvectionRun fine_run;
  for (const auto& g : levels) {
    AdvectionRun r = advect_swirl(p, exact_field(p, g, 0.0, SwirlComponent::VTheta), sim);
    const ErrorReport rep = error_report(r.snapshots, p);
    const auto& e = rep.rows.back();
    json rows = json::array();
    for (const auto& row : rep.rows) {
      rows.push_back({{"time", row.time}, {"linf", row.linf}, {"l2", row.l2}, {"rel_linf", row.rel_linf}});
    }
    table.push_back({{"nr", g.nr}, {"nz", g.nz}, {"h", std::max(g.hr(), g.hz())},
                     {"steps", r.steps}, {"feet_outside", r.feet_outside},
                     {"linf", e.linf}, {"l2", e.l2}, {"rel_linf", e.rel_linf},
                     {"snapshots", rows}});
    errs.push_back(e.linf);
    hs.push_back(std::max(g.hr(), g.hz()));
    rel_fine = e.rel_linf;
    fine_run = std::move(r);
  }
  json sim_json{{"levels", table}};
  if (errs.size() == 2 && errs[0] > 0.0 && errs[1] > 0.0) {
    sim_json["observed_order"] = observed_order(errs[0], errs[1], hs[0], hs[1]);
  } else {
    sim_json["observed_order"] = nullptr;
  }

  // omega = 0 with exact boundary data must return the exact stream function.
  const GridField psi_exact = exact_field(p, cfg.grid, 0.0, SwirlComponent::Psi);
  GridField bc = psi_exact;
  for (int i = 1; i < cfg.grid.nr - 1; ++i) {
    for (int j = 1; j < cfg.grid.nz - 1; ++j) bc.at(i, j) = 0.0;
  }
  const StreamSolve sol = solve_stream(GridField(cfg.grid, 0.0), bc, sim.elliptic);
  double psi_err = 0.0;
  for (std::size_t k = 0; k < psi_exact.values.size(); ++k) {
    psi_err = std::max(psi_err, std::abs(sol.psi.values[k] - psi_exact.values[k]));
  }
  sim_json["elliptic"] = {{"iterations", sol.iterations},
                          {"relative_residual", sol.residual},
                          {"max_error_vs_exact_psi", psi_err}};
  const bool pass = rel_fine <= cfg.sim_tol && psi_err <= 1e-8;
  sim_json["rel_linf"] = rel_fine;
  sim_json["pass"] = pass;
  cx.out.report["simulation"] = sim_json;

  for (std::size_t s = 1; s < fine_run.snapshots.size(); ++s) {
    const GridField& f = fine_run.snapshots[s];
    const GridField ex = exact_field(p, f.grid, f.time, SwirlComponent::VTheta);
    std::string csv = "r,z,vtheta_num,vtheta_exact,abs_err\n";
    for (int i = 0; i < f.grid.nr; ++i) {
      for (int j = 0; j < f.grid.nz; ++j) {
        csv += num(f.grid.r(i)) + "," + num(f.grid.z(j)) + "," + num(f.at(i, j)) + "," +
               num(ex.at(i, j)) + "," + num(std::abs(f.at(i, j) - ex.at(i, j))) + "\n";
      }
    }
    char name[48];
    std::snprintf(name, sizeof name, "simulate_%03zu.csv", s);
    cx.csv.emplace_back(name, std::move(csv));
  }
  std::string msg = "simulate: relative L-inf " + sci(rel_fine);
  if (!sim_json["observed_order"].is_null()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ", observed order %.3f", sim_json["observed_order"].get<double>());
    msg += buf;
  }
  cx.line(msg + ", omega=0 stream error " + sci(psi_err) + (pass ? " ok" : " FAIL"));
  return pass;
}

bool run_diagnose(Context& cx) {
  const RunConfig& cfg = cx.cfg;
  DiagnosticsOptions opt;
  opt.region.r_lo = cfg.grid.r_lo;
  opt.region.r_hi = cfg.grid.r_hi;
  opt.region.z_lo = cfg.grid.z_lo;
  opt.region.z_hi = cfg.grid.z_hi;
  const DiagnosticsReport rep = diagnose(cfg.params, opt);
  json& fits = cx.out.report["fits"];
  for (const auto& f : rep.fits) {
    fits.push_back({{"quantity", f.quantity},
                    {"exponent", f.fit.exponent},
                    {"prefactor", f.fit.prefactor},
                    {"rms_log_residual", f.fit.rms_log_residual},
                    {"sample_count", f.fit.sample_count}});
    char buf[96];
    std::snprintf(buf, sizeof buf, "diagnose fit %s: exponent %.6f", f.quantity.c_str(), f.fit.exponent);
    cx.line(buf);
  }
  json& bkm = cx.out.report["bkm"];
  for (const auto& b : rep.bkm) {
    bkm.push_back({{"t1", b.t1}, {"value", b.value}, {"log_growth", b.log_growth},
                   {"rel_error", b.rel_error}});
  }
  json energy{{"ratio", rep.energy_ratio},
              {"ratio_expected", rep.energy_ratio_expected},
              {"eps_monotone", rep.energy_monotone},
              {"pass", rep.energy_pass}};
  for (const auto& e : rep.energy_time) {
    energy["time"].push_back({{"t", e.t}, {"eps", e.eps}, {"R", e.R}, {"value", e.value}});
  }
  for (const auto& e : rep.energy_eps) {
    energy["eps_sweep"].push_back({{"eps", e.eps}, {"R", e.R}, {"value", e.value}});
  }
  cx.out.report["energy"] = energy;
  cx.line(std::string("diagnose: fits ") + (rep.fits_pass ? "ok" : "FAIL") + ", bkm " +
          (rep.bkm_pass ? "ok" : "FAIL") + ", energy ratio " + num(rep.energy_ratio) + " " +
          (rep.energy_pass ? "ok" : "FAIL"));
  return rep.pass;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Config, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) fail(ErrorKind::Config, "write failed for '" + path.string() + "'");
}

}  // namespace

RunResult run(const RunConfig& config, Command command) {
  config.validate();
  RunResult out;
  out.report = json::object();
  out.report["version"] = library_version();
  out.report["command"] = to_string(command);
  out.report["config"] = config.to_json();
  out.report["residuals"] = json::array();
  out.report["fits"] = json::array();
  out.report["bkm"] = json::array();
  Context cx{config, out, {}};

  const bool euler = config.params.variant == Variant::EulerSelfSimilar;
  std::vector<std::pair<std::string, bool (*)(Context&)>> steps;
  auto want = [&](Command c) { return command == c || command == Command::All; };
  if (want(Command::Verify)) steps.emplace_back("verify", run_verify);
  if (want(Command::Derive)) steps.emplace_back("derive", run_derive);
  if (euler || command != Command::All) {
    if (want(Command::Trace)) steps.emplace_back("trace", run_trace);
    if (want(Command::Simulate)) steps.emplace_back("simulate", run_simulate);
    if (want(Command::Diagnose)) steps.emplace_back("diagnose", run_diagnose);
  } else {
    out.report["skipped"] = {"trace", "simulate", "diagnose"};
    cx.line("trace, simulate, diagnose skipped: they apply to the Euler family only");
  }
  if (!euler && command != Command::All && command != Command::Verify && command != Command::Derive) {
    fail(ErrorKind::Variant, std::string(to_string(command)) + " applies to the Euler family only");
  }

  bool pass = true;
  json checks = json::object();
  for (const auto& [name, fn] : steps) {
    bool ok = false;
    try {
      ok = fn(cx);
    } catch (const Error& e) {
      if (!is_check_failure(e.kind())) throw;
      checks[name + "_error"] = std::string(to_string(e.kind())) + ": " + e.what();
      cx.line(name + ": " + e.what() + " FAIL");
    }
    checks[name] = ok;
    pass = pass && ok;
  }
  out.report["checks"] = checks;
  out.report["pass"] = pass;
  out.pass = pass;
  cx.line(std::string("overall: ") + (pass ? "pass" : "FAIL"));

  if (!config.output_dir.empty()) {
    const std::filesystem::path dir(config.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorKind::Config, "cannot create '" + config.output_dir + "': " + ec.message());
    write_file(dir / "report.json", out.report.dump(2) + "\n");
    out.files.push_back((dir / "report.json").string());
    for (const auto& [name, text] : cx.csv) {
      write_file(dir / name, text);
      out.files.push_back((dir / name).string());
    }
  }
  return out;
}

}  // namespace eulerlab
