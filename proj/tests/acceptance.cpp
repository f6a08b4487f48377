// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.
// Derived expectations come from the independent helpers in oracle.hpp.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eulerlab/characteristics.hpp"
#include "eulerlab/derivation.hpp"
#include "eulerlab/diagnostics.hpp"
#include "eulerlab/exact_solutions.hpp"
#include "eulerlab/flow.hpp"
#include "eulerlab/residuals.hpp"
#include "eulerlab/rng.hpp"
#include "eulerlab/simulator.hpp"
#include "oracle.hpp"

using namespace eulerlab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

SolutionParams draw_euler(Rng& rng) {
  SolutionParams p;
  p.a = rng.signed_magnitude(0.25, 4.0);
  p.k = rng.signed_magnitude(0.25, 4.0);
  p.t_star = rng.uniform(0.5, 4.0);
  return p;
}

double max_residual(const ResidualReport& rep) {
  double m = 0.0;
  for (const auto& e : rep.equations) m = std::max(m, e.max_abs_residual);
  return m;
}

// 1. Euler residuals over 20 seeded parameter sets.
void euler_residuals(Outcome& o) {
  Rng rng(20240101);
  double worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const SolutionParams p = draw_euler(rng);
    const auto rep = verify(p, euler_equations(), SamplingSpec::standard(p.t_star, 1000, 1000 + n),
                            1e-10);
    worst = std::max(worst, max_residual(rep));
    o.require(rep.pass, "draw " + std::to_string(n));
  }
  o.detail << "20 draws x 1000 points x 6 equations, worst |residual| " << worst;
}

// 2. Both viscous families.
void ns_residuals(Outcome& o) {
  Rng rng(20240202);
  double worst = 0.0;
  for (Variant v : {Variant::NSInverseR, Variant::NSDecayingSwirl}) {
    for (int n = 0; n < 10; ++n) {
      SolutionParams p = draw_euler(rng);
      p.nu = rng.uniform(0.0, 2.0);
      p.variant = v;
      const auto rep =
          verify(p, ns_equations(), SamplingSpec::standard(p.t_star, 1000, 2000 + n), 1e-10);
      worst = std::max(worst, max_residual(rep));
      o.require(rep.pass, std::string(to_string(v)) + " draw " + std::to_string(n));
    }
  }
  o.detail << "2 families x 10 draws x 1000 points, worst |residual| " << worst;
}

// 3. Derivation replay and the two concrete members.
void derivation(Outcome& o) {
  const Derivation d = derive_euler();
  o.require(d.stages.size() == 3, "three stages");
  if (d.stages.size() != 3) return;
  const std::string s1 = d.stages[0].result.primary().str();
  const std::string s2 = d.stages[1].result.primary().str();
  const auto p1 = d.stages[2].result.primary().value("p1");
  const auto q1 = d.stages[2].result.primary().value("q1");
  o.require(s1 == "p=1, q=1, b=-2*a", "meridional family, got " + s1);
  o.require(s2 == "abar=-a", "stream family, got " + s2);
  o.require(p1 && p1->str() == "0", "p1 = 0");
  o.require(q1 && q1->str() == "-(1 + 1/a)", "q1 = -(1 + 1/a)");
  const Poly a = Poly::symbol("a");
  const Poly rel = Poly(Rational(1)) + a * Poly::symbol("q1") -
                   Poly(Rational(2)) * a * Poly::symbol("p1") + a;
  o.require(d.stages[2].result.system.contains(rel), "relation a(1+q1)+1-2a p1 = 0");
  o.detail << s1 << "; " << s2 << "; p1=0, q1=" << (q1 ? q1->str() : "?");

  Rng rng(20240303);
  for (const auto& [a_text, expect] :
       std::vector<std::pair<std::string, std::string>>{{"1", "-2"}, {"-1/2", "1"}}) {
    const Rational av = Rational::parse(a_text);
    const Derivation c = derive_euler(av);
    const auto cq = c.value("q1");
    o.require(c.concrete && cq && cq->str() == expect, "q1 at a=" + a_text);
    SolutionParams ref = draw_euler(rng);
    ref.a = av.to_double();
    const MonomialFlow flow(c.fields, {{"k", ref.k}}, ref);
    const auto rep =
        verify(flow, euler_equations(), SamplingSpec::standard(ref.t_star, 1000, 3000), 1e-10);
    o.require(rep.pass, "concrete a=" + a_text + " residuals");
    o.detail << "; a=" << a_text << ": q1=" << (cq ? cq->str() : "?") << ", max residual "
             << max_residual(rep);
  }
}

// 4. Single-constant perturbations must be caught.
void mutations(Outcome& o) {
  const SolutionParams p;
  const double deltas[] = {1e-3, -1e-3, 1e-2, -1e-2, 1e-1};
  double weakest = 1e300;
  std::string weakest_at;
  int caught = 0, total = 0;
  for (int i = 0; i < PowerLawConstants::kCount; ++i) {
    for (double d : deltas) {
      auto c = PowerLawConstants::from(p);
      c[i] += d;
      const PowerLawFlow flow(c, p);
      const auto rep = verify(flow, euler_equations(), SamplingSpec::standard(1.0, 200, 4000), 1e-5);
      const double m = max_residual(rep);
      ++total;
      if (m > 1e-5) ++caught;
      if (m < weakest) {
        weakest = m;
        weakest_at = std::string(PowerLawConstants::label(i)) + (d > 0 ? "+" : "") +
                     std::to_string(d);
      }
      o.require(m > 1e-5, std::string(PowerLawConstants::label(i)) + " by " + std::to_string(d));
    }
  }
  o.detail << caught << "/" << total << " perturbations detected; smallest max residual "
           << weakest << " (" << weakest_at << ")";
}

// 5. Characteristics.
void characteristics(Outcome& o) {
  const SolutionParams p;
  const oracle::Params op{1.0, 1.0, 1.0};
  const auto cf = flow_closed_form(p, 0.0, 1.0, 1.0, 0.5);
  const auto tr = flow_numeric(p, 0.0, 1.0, 1.0, 0.5, 1e-3);
  const auto& end = tr.samples.back();
  const double gap = std::hypot(end.r - cf[0], end.z - cf[1]);
  const auto ref = oracle::rk4_path(op, 0.0, 1.0, 1.0, 0.5, 50000);
  o.require(gap <= 1e-7, "closed form vs RK4");
  o.require(std::hypot(cf[0] - ref[0], cf[1] - ref[1]) <= 1e-10, "closed form vs oracle RK4");

  double drift_cf = 0.0, drift_num = 0.0;
  Rng rng(20240505);
  for (int n = 0; n < 20; ++n) {
    const SolutionParams q = draw_euler(rng);
    const double r0 = rng.uniform(0.5, 2.0), z0 = rng.uniform(-1.0, 1.0);
    drift_cf = std::max(drift_cf, max_drift(conserved_swirl(
                                      q, trace_closed_form(q, 0.0, r0, z0, 0.8 * q.t_star, 50))));
    drift_num = std::max(drift_num,
                         max_drift(conserved_swirl(
                             q, flow_numeric(q, 0.0, r0, z0, 0.5 * q.t_star, 1e-3 * q.t_star))));
  }
  o.require(drift_cf <= 1e-9, "closed-form drift");
  o.require(drift_num <= 1e-7, "numeric drift");

  auto err = [&](double dt) {
    const auto s = flow_numeric(p, 0.0, 1.0, 1.0, 0.5, dt).samples.back();
    return std::hypot(s.r - cf[0], s.z - cf[1]);
  };
  const double order = std::log2(err(0.02) / err(0.01));
  o.require(order >= 3.7 && order <= 4.3, "RK4 order");
  o.detail << "RK4 gap " << gap << ", r vtheta drift " << drift_cf << " (closed form) / "
           << drift_num << " (RK4), order " << order;
}

// 6. Manufactured-solution simulation.
void simulation(Outcome& o) {
  const SolutionParams p;
  auto run = [&](int n) {
    AnnulusGrid g;
    g.nr = g.nz = n;
    const auto res = advect_swirl(p, exact_field(p, g, 0.0, SwirlComponent::VTheta), SimConfig{});
    return error_report(res.snapshots, p).rows.back();
  };
  const auto e65 = run(65);
  const auto e129 = run(129);
  const double order = std::log2(e65.linf / e129.linf);
  o.require(e65.rel_linf <= 0.01, "relative error at 65");
  o.require(order >= 1.7 && order <= 2.3, "order");

  AnnulusGrid g;
  g.nr = g.nz = 33;
  GridField bc(g, 0.0);
  auto psi = [](double r, double z) { return -r * z; };  // a = T* = 1, t = 0
  for (int i = 0; i < g.nr; ++i) {
    for (int j = 0; j < g.nz; ++j) {
      if (g.on_boundary(i, j)) bc.at(i, j) = psi(g.r(i), g.z(j));
    }
  }
  const auto s = solve_stream(GridField(g, 0.0), bc);
  double perr = 0.0;
  for (int i = 0; i < g.nr; ++i) {
    for (int j = 0; j < g.nz; ++j) perr = std::max(perr, std::abs(s.psi.at(i, j) - psi(g.r(i), g.z(j))));
  }
  o.require(perr <= 1e-8, "stream function");
  o.detail << "rel Linf " << e65.rel_linf << " (65), Linf " << e65.linf << " / " << e129.linf
           << ", order " << order << ", psi error " << perr;
}

// 7. Blowup diagnostics.
void blowup(Outcome& o) {
  const SolutionParams p;
  const DiagnosticRegion region;
  std::vector<FitSample> s;
  for (int i = 0; i < 8; ++i) {
    const double t = 0.9 * i / 7.0;
    s.push_back({t, sup_gradient(p, t, region)});
  }
  const double expo = fit_blowup_exponent(s, 1.0).exponent;
  o.require(std::abs(expo + 1.0) <= 0.01, "gradient exponent");

  // sup |omega| = |k/a| r_lo^(-2 - 1/a) / tau for the preset, hence w0 ln(T / (T - t1)).
  const double w0 = std::pow(region.r_lo, -3.0);
  double bkm_err = 0.0;
  for (double t1 : {0.5, 0.75, 0.875, 0.9375}) {
    const double expect = w0 * std::log(1.0 / (1.0 - t1));
    bkm_err = std::max(bkm_err, std::abs(bkm_integral(p, region, t1) / expect - 1.0));
  }
  o.require(bkm_err <= 0.01, "BKM growth");

  EnergyRegion er;
  er.eps = 0.5;
  er.R = 2.0;
  const double e0 = energy_ball(p, 0.0, er);
  const double ratio = energy_ball(p, 0.5, er) / e0;
  o.require(std::abs(ratio - 4.0) <= 1e-6, "energy ratio");
  o.require(std::abs(e0 / oracle::energy_a1k1(1.0, 0.0, 0.5, 2.0) - 1.0) <= 1e-10,
            "energy against hand integral");
  std::vector<double> sweep;
  for (double eps : {0.1, 0.01, 0.001}) {
    er.eps = eps;
    sweep.push_back(energy_ball(p, 0.0, er));
  }
  o.require(sweep[0] < sweep[1] && sweep[1] < sweep[2], "energy monotone in eps");
  o.detail << "exponent " << expo << ", BKM rel error " << bkm_err << ", energy ratio " << ratio
           << ", eps sweep " << sweep[0] << " < " << sweep[1] << " < " << sweep[2];
}

// 8. Printed gradient formulas against differentiation.
void gradient_check(Outcome& o) {
  const SolutionParams p;
  const oracle::Params op{1.0, 1.0, 1.0};
  const auto cc = cross_check_gradient(p, 100, 42);

  // Entries where the printed formula disagrees with a finite-difference oracle.
  std::set<std::pair<int, int>> wrong;
  Rng rng(808);
  for (int n = 0; n < 20; ++n) {
    const double t = rng.uniform(0.0, 0.8), r = rng.uniform(0.5, 2.0), z = rng.uniform(-1.0, 1.0);
    const double th = rng.uniform(0.0, 6.28);
    const double x[3] = {r * std::cos(th), r * std::sin(th), z};
    const Tensor3 printed = gradient_paper(p, {t, x[0], x[1], x[2]});
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double fd = oracle::d1(
            [&](double h) {
              double y[3] = {x[0], x[1], x[2]};
              y[j] += h;
              return oracle::velocity_cart(op, t, y[0], y[1], y[2])[i];
            },
            0.0);
        if (std::abs(fd - printed[i][j]) > 1e-6 * std::max(1.0, std::abs(fd))) wrong.insert({i, j});
      }
    }
  }
  std::set<std::pair<int, int>> reported;
  for (const auto& m : cc.mismatched) reported.insert({m[0], m[1]});
  o.require(reported == wrong, "reported entries equal the oracle's");
  bool only_v1_v2 = true;
  for (const auto& [i, j] : wrong) only_v1_v2 = only_v1_v2 && i < 2;
  o.require(only_v1_v2, "only v1, v2 rows");
  o.require(cc.third_row_max_diff <= 1e-12, "grad v3");
  o.detail << "mismatched (1-based):";
  for (const auto& [i, j] : reported) o.detail << " (" << i + 1 << "," << j + 1 << ")";
  o.detail << "; grad v3 max diff " << cc.third_row_max_diff;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> criteria{
      {"exact-solution verification", 10.0, euler_residuals},
      {"Navier-Stokes variants", 5.0, ns_residuals},
      {"derivation replay", 1.0, derivation},
      {"mutation detection", 5.0, mutations},
      {"characteristics", 5.0, characteristics},
      {"manufactured-solution simulation", 60.0, simulation},
      {"blowup diagnostics", 10.0, blowup},
      {"printed-gradient cross-check", 1.0, gradient_check},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= criteria[i].limit;
    const bool ok = o.pass && in_time;
    if (!ok) ++failed;
    std::printf("criterion %zu %s: %s | %.2f s (limit %.0f s)%s | %s\n", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].name, secs, criteria[i].limit, in_time ? "" : " TOO SLOW",
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
