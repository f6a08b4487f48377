#include "eulerlab/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace eulerlab {

void AnnulusGrid::validate() const {
  if (!(r_lo > 0.0)) fail(ErrorKind::Param, "grid r_lo must be positive");
  if (!(r_hi > r_lo)) fail(ErrorKind::Param, "grid r_hi must exceed r_lo");
  if (!(z_hi > z_lo)) fail(ErrorKind::Param, "grid z_hi must exceed z_lo");
  if (nr < 8 || nz < 8) fail(ErrorKind::Param, "grid needs at least 8 nodes per direction");
}

GridField::GridField(const AnnulusGrid& g, double t) : grid(g), values(g.size(), 0.0), time(t) {
  g.validate();
}

GridField exact_field(const SolutionParams& params, const AnnulusGrid& grid, double t,
                      SwirlComponent which) {
  validate_point(params, CylPoint{t, grid.r_lo, 0.0});
  return GridField::sample(grid, t, [&](double r, double z) {
    switch (which) {
      case SwirlComponent::Psi: return stream_function(params, t, r, z);
      case SwirlComponent::VR: return velocity_cyl(params, t, r, z).vr;
      case SwirlComponent::VZ: return velocity_cyl(params, t, r, z).vz;
      case SwirlComponent::VTheta: break;
    }
    return velocity_cyl(params, t, r, z).vtheta;
  });
}

namespace {

void require_same_grid(const GridField& a, const GridField& b) {
  const auto& x = a.grid;
  const auto& y = b.grid;
  if (x.nr != y.nr || x.nz != y.nz || x.r_lo != y.r_lo || x.r_hi != y.r_hi || x.z_lo != y.z_lo ||
      x.z_hi != y.z_hi) {
    fail(ErrorKind::Param, "fields live on different grids");
  }
}

// r-weighted stencil: (A x)_ij = r_i * (-L_h x)_ij. Symmetric positive definite
// on the interior unknowns.
struct Stencil {
  const AnnulusGrid& g;
  double ihr2, ihz2;

  explicit Stencil(const AnnulusGrid& grid)
      : g(grid), ihr2(1.0 / (grid.hr() * grid.hr())), ihz2(1.0 / (grid.hz() * grid.hz())) {}

  double diag(int i) const {
    const double r = g.r(i);
    return 2.0 * r * ihr2 + 2.0 * r * ihz2 + 1.0 / r;
  }

  double apply(const std::vector<double>& x, int i, int j) const {
    const double r = g.r(i);
    const double hr = g.hr();
    const double rp = r + 0.5 * hr;
    const double rm = r - 0.5 * hr;
    return diag(i) * x[g.index(i, j)] - rp * ihr2 * x[g.index(i + 1, j)] -
           rm * ihr2 * x[g.index(i - 1, j)] -
           r * ihz2 * (x[g.index(i, j + 1)] + x[g.index(i, j - 1)]);
  }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) s += a[n] * b[n];
  return s;
}

double d_one_sided(double f0, double f1, double f2, double h) {
  return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
}

}  // namespace

GridField apply_stream_operator(const GridField& psi) {
  const AnnulusGrid& g = psi.grid;
  const Stencil st(g);
  GridField out(g, psi.time);
  for (int i = 1; i < g.nr - 1; ++i) {
    for (int j = 1; j < g.nz - 1; ++j) out.at(i, j) = st.apply(psi.values, i, j) / g.r(i);
  }
  return out;
}

StreamSolve solve_stream(const GridField& omega, const GridField& bc,
                         const EllipticOptions& options) {
  require_same_grid(omega, bc);
  const AnnulusGrid& g = bc.grid;
  g.validate();
  if (!(options.tol > 0.0)) fail(ErrorKind::Param, "elliptic tolerance must be positive");
  const int max_iter = options.max_iter > 0 ? options.max_iter : 10 * g.nr * g.nz;
  const Stencil st(g);
  const std::size_t n = g.size();

  // Jacobi scaling s = D^(-1/2); the iteration runs on S A S y = S b.
  std::vector<double> s(n, 0.0);
  for (int i = 1; i < g.nr - 1; ++i) {
    for (int j = 1; j < g.nz - 1; ++j) s[g.index(i, j)] = 1.0 / std::sqrt(st.diag(i));
  }

  // Scaled right-hand side (source plus boundary coupling) and residual of the guess.
  std::vector<double> x = bc.values;
  std::vector<double> rhs(n, 0.0), res(n, 0.0);
  {
    std::vector<double> boundary_only(n, 0.0);
    for (int i = 0; i < g.nr; ++i) {
      for (int j = 0; j < g.nz; ++j) {
        if (g.on_boundary(i, j)) boundary_only[g.index(i, j)] = bc.at(i, j);
      }
    }
    for (int i = 1; i < g.nr - 1; ++i) {
      for (int j = 1; j < g.nz - 1; ++j) {
        const std::size_t k = g.index(i, j);
        rhs[k] = s[k] * (g.r(i) * omega.at(i, j) - st.apply(boundary_only, i, j));
        res[k] = s[k] * (g.r(i) * omega.at(i, j) - st.apply(x, i, j));
      }
    }
  }

  StreamSolve out;
  const double rhs_norm = std::sqrt(dot(rhs, rhs));
  auto scaled_apply = [&](const std::vector<double>& y, std::vector<double>& ay) {
    std::vector<double> u(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) u[k] = s[k] * y[k];
    for (int i = 1; i < g.nr - 1; ++i) {
      for (int j = 1; j < g.nz - 1; ++j) {
        const std::size_t k = g.index(i, j);
        ay[k] = s[k] * st.apply(u, i, j);
      }
    }
  };

  double rel = rhs_norm == 0.0 ? std::sqrt(dot(res, res)) : std::sqrt(dot(res, res)) / rhs_norm;
  out.residual_history.push_back(rel);
  if (rhs_norm == 0.0 && rel == 0.0) {
    out.psi = bc;
    out.psi.time = bc.time;
    return out;
  }

  // Conjugate residual on the scaled system: ||res|| is non-increasing.
  std::vector<double> y(n, 0.0), p = res, ar(n, 0.0), ap(n, 0.0);
  scaled_apply(res, ar);
  ap = ar;
  double res_ar = dot(res, ar);
  int it = 0;
  while (rel > options.tol && it < max_iter) {
    const double ap2 = dot(ap, ap);
    if (ap2 == 0.0) break;
    const double alpha = res_ar / ap2;
    for (std::size_t k = 0; k < n; ++k) {
      y[k] += alpha * p[k];
      res[k] -= alpha * ap[k];
    }
    scaled_apply(res, ar);
    const double next = dot(res, ar);
    const double beta = next / res_ar;
    res_ar = next;
    for (std::size_t k = 0; k < n; ++k) {
      p[k] = res[k] + beta * p[k];
      ap[k] = ar[k] + beta * ap[k];
    }
    ++it;
    rel = std::sqrt(dot(res, res)) / (rhs_norm == 0.0 ? 1.0 : rhs_norm);
    out.residual_history.push_back(rel);
  }
  out.iterations = it;
  out.residual = rel;
  if (rel > options.tol) {
    fail(ErrorKind::NoConvergence, "stream solve stopped after " + std::to_string(it) +
                                       " iterations with relative residual " +
                                       std::to_string(rel));
  }
  for (std::size_t k = 0; k < n; ++k) x[k] += s[k] * y[k];
  out.psi = bc;
  out.psi.values = std::move(x);
  return out;
}

MeridionalVelocity velocities_from_stream(const GridField& psi) {
  const AnnulusGrid& g = psi.grid;
  const double hr = g.hr(), hz = g.hz();
  MeridionalVelocity v{GridField(g, psi.time), GridField(g, psi.time)};
  for (int i = 0; i < g.nr; ++i) {
    for (int j = 0; j < g.nz; ++j) {
      double dz;
      if (j == 0) {
        dz = d_one_sided(psi.at(i, 0), psi.at(i, 1), psi.at(i, 2), hz);
      } else if (j == g.nz - 1) {
        dz = -d_one_sided(psi.at(i, j), psi.at(i, j - 1), psi.at(i, j - 2), hz);
      } else {
        dz = (psi.at(i, j + 1) - psi.at(i, j - 1)) / (2.0 * hz);
      }
      auto rpsi = [&](int ii) { return g.r(ii) * psi.at(ii, j); };
      double dr;
      if (i == 0) {
        dr = d_one_sided(rpsi(0), rpsi(1), rpsi(2), hr);
      } else if (i == g.nr - 1) {
        dr = -d_one_sided(rpsi(i), rpsi(i - 1), rpsi(i - 2), hr);
      } else {
        dr = (rpsi(i + 1) - rpsi(i - 1)) / (2.0 * hr);
      }
      v.vr.at(i, j) = -dz;
      v.vz.at(i, j) = dr / g.r(i);
    }
  }
  return v;
}

GridField discrete_divergence(const MeridionalVelocity& v) {
  require_same_grid(v.vr, v.vz);
  const AnnulusGrid& g = v.vr.grid;
  GridField out(g, v.vr.time);
  for (int i = 1; i < g.nr - 1; ++i) {
    for (int j = 1; j < g.nz - 1; ++j) {
      const double drr = (g.r(i + 1) * v.vr.at(i + 1, j) - g.r(i - 1) * v.vr.at(i - 1, j)) /
                         (2.0 * g.hr() * g.r(i));
      const double dz = (v.vz.at(i, j + 1) - v.vz.at(i, j - 1)) / (2.0 * g.hz());
      out.at(i, j) = drr + dz;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(VelocitySource v) noexcept {
  return v == VelocitySource::ExactMeridional ? "exact" : "stream";
}
const char* to_string(Interpolation v) noexcept {
  switch (v) {
    case Interpolation::Bilinear: return "bilinear";
    case Interpolation::Biquadratic: return "biquadratic";
    case Interpolation::Bicubic: break;
  }
  return "bicubic";
}
const char* to_string(Backtrace v) noexcept {
  return v == Backtrace::Midpoint ? "midpoint" : "exact";
}

void SimConfig::validate(double t_star) const {
  if (!(cfl > 0.0) || cfl > 1.0) fail(ErrorKind::Param, "cfl must lie in (0, 1]");
  if (!(t_end > 0.0)) fail(ErrorKind::Param, "t_end must be positive");
  if (!(max_fraction > 0.0) || max_fraction >= 1.0) {
    fail(ErrorKind::Param, "max_fraction must lie in (0, 1)");
  }
  if (t_end > max_fraction * t_star * (1.0 + 1e-12)) {
    fail(ErrorKind::Param, "t_end exceeds " + std::to_string(max_fraction) + " t_star");
  }
  if (snapshots < 1) fail(ErrorKind::Param, "need at least one snapshot");
  if (velocity == VelocitySource::FromStream && backtrace == Backtrace::ExactFlowMap) {
    fail(ErrorKind::Config, "the exact flow map backtrace needs exact meridional velocities");
  }
}

namespace {

// Cell lookup: returns the cell index and the fractional offset in [0, 1].
void locate(double x, double lo, double h, int n, int& cell, double& frac) {
  double u = (x - lo) / h;
  cell = std::clamp(static_cast<int>(std::floor(u)), 0, n - 2);
  frac = u - cell;
}

double bilinear(const GridField& f, double r, double z) {
  const AnnulusGrid& g = f.grid;
  int i, j;
  double fr, fz;
  locate(r, g.r_lo, g.hr(), g.nr, i, fr);
  locate(z, g.z_lo, g.hz(), g.nz, j, fz);
  return (1.0 - fr) * ((1.0 - fz) * f.at(i, j) + fz * f.at(i, j + 1)) +
         fr * ((1.0 - fz) * f.at(i + 1, j) + fz * f.at(i + 1, j + 1));
}

// Cubic Lagrange weights on nodes base..base+3 at offset u from node `base`.
std::array<double, 4> cubic_weights(double u) {
  const double a = u, b = u - 1.0, c = u - 2.0, d = u - 3.0;
  return {-b * c * d / 6.0, a * c * d / 2.0, -a * b * d / 2.0, a * b * c / 6.0};
}

void cubic_stencil(double x, double lo, double h, int n, int& base, std::array<double, 4>& w) {
  const double u = (x - lo) / h;
  base = std::clamp(static_cast<int>(std::floor(u)) - 1, 0, n - 4);
  w = cubic_weights(u - base);
}

// Quadratic Lagrange weights on the three nodes around the nearest node.
void quadratic_stencil(double x, double lo, double h, int n, int& base, std::array<double, 4>& w) {
  const double u = (x - lo) / h;
  base = std::clamp(static_cast<int>(std::lround(u)) - 1, 0, n - 3);
  const double s = u - base - 1.0;  // offset from the middle node
  w = {0.5 * s * (s - 1.0), 1.0 - s * s, 0.5 * s * (s + 1.0), 0.0};
}

template <int M>
double tensor(const GridField& f, int bi, int bj, const std::array<double, 4>& wr,
              const std::array<double, 4>& wz) {
  double sum = 0.0;
  for (int a = 0; a < M; ++a) {
    double row = 0.0;
    for (int b = 0; b < M; ++b) row += wz[b] * f.at(bi + a, bj + b);
    sum += wr[a] * row;
  }
  return sum;
}

double interpolate(const GridField& f, double r, double z, Interpolation kind) {
  const AnnulusGrid& g = f.grid;
  int bi, bj;
  std::array<double, 4> wr, wz;
  switch (kind) {
    case Interpolation::Bilinear:
      return bilinear(f, r, z);
    case Interpolation::Biquadratic:
      quadratic_stencil(r, g.r_lo, g.hr(), g.nr, bi, wr);
      quadratic_stencil(z, g.z_lo, g.hz(), g.nz, bj, wz);
      return tensor<3>(f, bi, bj, wr, wz);
    case Interpolation::Bicubic:
      break;
  }
  cubic_stencil(r, g.r_lo, g.hr(), g.nr, bi, wr);
  cubic_stencil(z, g.z_lo, g.hz(), g.nz, bj, wz);
  return tensor<4>(f, bi, bj, wr, wz);
}

bool inside(const AnnulusGrid& g, double r, double z) {
  return r >= g.r_lo && r <= g.r_hi && z >= g.z_lo && z <= g.z_hi;
}

struct VelocityField {
  const SolutionParams& params;
  VelocitySource source;
  double t;                       // evaluation time
  const MeridionalVelocity* grid;  // FromStream only

  std::array<double, 2> operator()(double r, double z) const {
    if (source == VelocitySource::ExactMeridional) {
      const double tau = params.t_star - t;
      return {params.a * r / tau, -2.0 * params.a * z / tau};
    }
    return {bilinear(grid->vr, r, z), bilinear(grid->vz, r, z)};
  }
};

MeridionalVelocity stream_velocity(const SolutionParams& params, const AnnulusGrid& g, double t,
                                   const EllipticOptions& options, GridField* warm) {
  GridField bc = exact_field(params, g, t, SwirlComponent::Psi);
  if (warm != nullptr && !warm->values.empty()) {
    for (int i = 1; i < g.nr - 1; ++i) {
      for (int j = 1; j < g.nz - 1; ++j) bc.at(i, j) = warm->at(i, j);
    }
  }
  const StreamSolve sol = solve_stream(GridField(g, t), bc, options);
  if (warm != nullptr) *warm = sol.psi;
  return velocities_from_stream(sol.psi);
}

double max_speed(const SolutionParams& params, const AnnulusGrid& g, double t,
                 const MeridionalVelocity* grid_v) {
  double m = 0.0;
  const VelocityField v{params, grid_v ? VelocitySource::FromStream : VelocitySource::ExactMeridional,
                        t, grid_v};
  for (int i = 0; i < g.nr; ++i) {
    for (int j = 0; j < g.nz; ++j) {
      const auto u = grid_v ? std::array<double, 2>{grid_v->vr.at(i, j), grid_v->vz.at(i, j)}
                            : v(g.r(i), g.z(j));
      m = std::max(m, std::hypot(u[0], u[1]));
    }
  }
  return m;
}

GridField step_with(const SolutionParams& params, const GridField& vtheta, double dt,
                    const SimConfig& config, const MeridionalVelocity* half_v, StepStats* stats) {
  const AnnulusGrid& g = vtheta.grid;
  const double t0 = vtheta.time;
  const double t1 = t0 + dt;
  if (!(t1 < params.t_star)) fail(ErrorKind::Step, "step would reach t_star");
  const VelocityField v{params, config.velocity, t0 + 0.5 * dt, half_v};
  GridField out(g, t1);
  for (int i = 0; i < g.nr; ++i) {
    for (int j = 0; j < g.nz; ++j) {
      const double r = g.r(i), z = g.z(j);
      if (g.on_boundary(i, j)) {
        out.at(i, j) = velocity_cyl(params, t1, r, z).vtheta;
        continue;
      }
      double rf, zf;
      if (config.backtrace == Backtrace::ExactFlowMap) {
        const double ratio = (params.t_star - t1) / (params.t_star - t0);  // tau1 / tau0
        rf = r * std::pow(ratio, params.a);
        zf = z * std::pow(ratio, -2.0 * params.a);
      } else {
        const auto v1 = v(r, z);
        const double rm = r - 0.5 * dt * v1[0];
        const double zm = z - 0.5 * dt * v1[1];
        const auto v2 = inside(g, rm, zm) ? v(rm, zm) : v1;
        rf = r - dt * v2[0];
        zf = z - dt * v2[1];
      }
      if (!inside(g, rf, zf)) {
        out.at(i, j) = velocity_cyl(params, t1, r, z).vtheta;
        if (stats != nullptr) ++stats->feet_outside;
        continue;
      }
      // r vtheta is constant along characteristics.
      out.at(i, j) = rf * interpolate(vtheta, rf, zf, config.interpolation) / r;
    }
  }
  return out;
}

}  // namespace

GridField advect_step(const SolutionParams& params, const GridField& vtheta, double dt,
                      const SimConfig& config, StepStats* stats) {
  params.validate();
  if (!(dt >= 0.0)) fail(ErrorKind::Param, "dt must be non-negative");
  if (dt == 0.0) return vtheta;
  MeridionalVelocity half;
  const MeridionalVelocity* half_v = nullptr;
  if (config.velocity == VelocitySource::FromStream) {
    half = stream_velocity(params, vtheta.grid, vtheta.time + 0.5 * dt, config.elliptic, nullptr);
    half_v = &half;
  }
  return step_with(params, vtheta, dt, config, half_v, stats);
}

AdvectionRun advect_swirl(const SolutionParams& params, const GridField& vtheta0,
                          const SimConfig& config) {
  params.validate();
  config.validate(params.t_star);
  const AnnulusGrid& g = vtheta0.grid;
  g.validate();
  AdvectionRun run;
  run.snapshots.push_back(vtheta0);
  GridField current = vtheta0;
  GridField warm;
  const double h = std::min(g.hr(), g.hz());
  for (int s = 1; s <= config.snapshots; ++s) {
    const double target =
        s == config.snapshots ? config.t_end : vtheta0.time + (config.t_end - vtheta0.time) * s / config.snapshots;
    while (current.time < target) {
      MeridionalVelocity now, half;
      const MeridionalVelocity* now_v = nullptr;
      if (config.velocity == VelocitySource::FromStream) {
        now = stream_velocity(params, g, current.time, config.elliptic, &warm);
        now_v = &now;
      }
      double dt = config.cfl * h / max_speed(params, g, current.time, now_v);
      if (dt < config.min_dt) {
        fail(ErrorKind::CflViolation, "time step " + std::to_string(dt) + " below minimum");
      }
      const bool last = current.time + dt >= target * (1.0 - 1e-14);
      if (last) dt = target - current.time;
      const MeridionalVelocity* half_v = nullptr;
      if (config.velocity == VelocitySource::FromStream) {
        half = stream_velocity(params, g, current.time + 0.5 * dt, config.elliptic, &warm);
        half_v = &half;
      }
      StepStats stats;
      current = step_with(params, current, dt, config, half_v, &stats);
      if (last) current.time = target;
      run.feet_outside += stats.feet_outside;
      run.min_dt = run.steps == 0 ? dt : std::min(run.min_dt, dt);
      run.max_dt = std::max(run.max_dt, dt);
      ++run.steps;
    }
    run.snapshots.push_back(current);
  }
  return run;
}

ErrorReport error_report(const std::vector<GridField>& numeric, const SolutionParams& params) {
  ErrorReport rep;
  for (const auto& f : numeric) {
    const GridField exact = exact_field(params, f.grid, f.time, SwirlComponent::VTheta);
    SnapshotError e;
    e.time = f.time;
    double sum2 = 0.0, emax = 0.0;
    for (std::size_t k = 0; k < f.values.size(); ++k) {
      const double d = std::abs(f.values[k] - exact.values[k]);
      e.linf = std::max(e.linf, d);
      sum2 += d * d;
      emax = std::max(emax, std::abs(exact.values[k]));
    }
    e.l2 = std::sqrt(sum2 / static_cast<double>(f.values.size()));
    e.rel_linf = emax > 0.0 ? e.linf / emax : 0.0;
    rep.rows.push_back(e);
  }
  double first = 0.0, last = 0.0;
  for (const auto& r : rep.rows) {
    if (r.linf > 0.0) {
      if (first == 0.0) first = r.linf;
      last = r.linf;
    }
  }
  rep.amplification = first > 0.0 ? last / first : 0.0;
  return rep;
}

double observed_order(double e_coarse, double e_fine, double h_coarse, double h_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0) || !(h_coarse > 0.0) || !(h_fine > 0.0) ||
      h_coarse == h_fine) {
    fail(ErrorKind::DegenerateFit, "order estimate needs positive errors and distinct spacings");
  }
  return std::log(e_coarse / e_fine) / std::log(h_coarse / h_fine);
}

}  // namespace eulerlab
