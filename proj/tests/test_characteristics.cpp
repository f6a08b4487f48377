#include <doctest.h>

#include <cmath>
#include <functional>

#include "eulerlab/characteristics.hpp"
#include "eulerlab/error.hpp"
#include "eulerlab/rng.hpp"
#include "oracle.hpp"

using namespace eulerlab;

namespace {

SolutionParams make(double a, double k, double T, Variant v = Variant::EulerSelfSimilar) {
  SolutionParams p;
  p.a = a;
  p.k = k;
  p.t_star = T;
  p.variant = v;
  return p;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Domain;
}

}  // namespace

TEST_SUITE("characteristics") {

TEST_CASE("closed-form map example against the RK4 oracle") {
  const auto rz = flow_closed_form(SolutionParams{}, 0.0, 1.0, 1.0, 0.5);
  const auto o = oracle::rk4_path({1.0, 1.0, 1.0}, 0.0, 1.0, 1.0, 0.5, 5000);
  CHECK(rz[0] == doctest::Approx(o[0]).epsilon(1e-12));
  CHECK(rz[1] == doctest::Approx(o[1]).epsilon(1e-12));
  CHECK(std::abs(rz[0] - 2.0) <= 1e-14);
  CHECK(std::abs(rz[1] - 0.25) <= 1e-14);
}

TEST_CASE("identity at the start time") {
  const auto p = make(-0.7, 2.0, 1.5);
  const auto rz = flow_closed_form(p, 0.3, 1.2, -0.4, 0.3);
  CHECK(rz[0] == 1.2);
  CHECK(rz[1] == -0.4);
}

TEST_CASE("area element and group property") {
  Rng rng(5);
  for (int n = 0; n < 50; ++n) {
    const auto p = make(rng.signed_magnitude(0.25, 4.0), 1.0, rng.uniform(0.5, 4.0));
    const double t0 = rng.uniform(0.0, 0.3) * p.t_star;
    const double t1 = t0 + rng.uniform(0.0, 0.3) * p.t_star;
    const double t2 = t1 + rng.uniform(0.0, 0.3) * p.t_star;
    const double r0 = rng.uniform(0.5, 2.0), z0 = rng.uniform(-1.0, 1.0);
    const auto j = flow_jacobian(p, t0, t2);
    const auto end = flow_closed_form(p, t0, r0, z0, t2);
    // r dr dz is preserved: r * (dr/dr0) * (dz/dz0) = r0
    CHECK(std::abs(end[0] * j[0] * j[1] - r0) <= 1e-12 * std::max(1.0, r0));
    const auto mid = flow_closed_form(p, t0, r0, z0, t1);
    const auto two = flow_closed_form(p, t1, mid[0], mid[1], t2);
    CHECK(std::abs(two[0] - end[0]) <= 1e-12 * std::max(1.0, std::abs(end[0])));
    CHECK(std::abs(two[1] - end[1]) <= 1e-12 * std::max(1.0, std::abs(end[1])));
  }
}

TEST_CASE("RK4 trajectory accuracy and order") {
  const SolutionParams p;
  const auto tr = flow_numeric(p, 0.0, 1.0, 1.0, 0.5, 1e-3);
  const auto& last = tr.samples.back();
  CHECK(last.t == 0.5);
  CHECK(std::abs(last.r - 2.0) <= 1e-9);
  CHECK(std::abs(last.z - 0.25) <= 1e-9);
  for (std::size_t i = 1; i < tr.samples.size(); ++i) CHECK(tr.samples[i].t > tr.samples[i - 1].t);

  // Independent RK4 with the same step lands on the same point.
  const auto o = oracle::rk4_path({1.0, 1.0, 1.0}, 0.0, 1.0, 1.0, 0.5, 500);
  CHECK(std::abs(last.r - o[0]) <= 1e-13);
  CHECK(std::abs(last.z - o[1]) <= 1e-13);

  auto err = [&](double dt) {
    const auto s = flow_numeric(p, 0.0, 1.0, 1.0, 0.5, dt).samples.back();
    return std::hypot(s.r - 2.0, s.z - 0.25);
  };
  const double e1 = err(0.02), e2 = err(0.01);
  const double order = std::log2(e1 / e2);
  CHECK(order >= 3.7);
  CHECK(order <= 4.3);
}

TEST_CASE("contracting trajectories for a = -1") {
  const auto p = make(-1.0, 1.0, 1.0);
  const auto tr = flow_numeric(p, 0.0, 1.5, 0.5, 0.9, 1e-3);
  for (std::size_t i = 1; i < tr.samples.size(); ++i) {
    CHECK(tr.samples[i].r < tr.samples[i - 1].r);
    CHECK(tr.samples[i].r > 0.0);
  }
  CHECK(tr.samples.back().r == doctest::Approx(1.5 * 0.1).epsilon(1e-9));
}

TEST_CASE("step errors") {
  const SolutionParams p;
  CHECK(kind_of([&] { flow_numeric(p, 0.0, 1.0, 1.0, 0.95, 1e-3); }) == ErrorKind::Step);
  CHECK(kind_of([&] { flow_numeric(p, 0.0, 1.0, 1.0, 0.5, 0.0); }) == ErrorKind::Param);
  CHECK(kind_of([&] { flow_closed_form(p, 0.0, -1.0, 1.0, 0.5); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { flow_closed_form(p, 0.5, 1.0, 1.0, 0.4); }) == ErrorKind::Domain);
  CHECK_NOTHROW(flow_numeric(p, 0.0, 1.0, 1.0, 0.96, 1e-3, 0.99));
}

TEST_CASE("angular momentum is carried by the flow") {
  const SolutionParams p;
  const auto tr = trace_closed_form(p, 0.0, 1.0, 0.0, 0.5, 10);
  const auto m = conserved_swirl(p, tr);
  CHECK(m.front() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(m.back() - 1.0) <= 1e-10);
  CHECK(tr.samples.back().r == doctest::Approx(2.0));

  const Trajectory one{{{0.2, 1.3, 0.1}}, p, {0.2, 1.3, 0.1}};
  CHECK(max_drift(conserved_swirl(p, one)) == 0.0);

  Rng rng(9);
  for (int n = 0; n < 20; ++n) {
    const auto q = make(rng.signed_magnitude(0.25, 4.0), rng.signed_magnitude(0.25, 4.0),
                        rng.uniform(0.5, 4.0));
    const double r0 = rng.uniform(0.5, 2.0), z0 = rng.uniform(-1.0, 1.0);
    const auto cf = trace_closed_form(q, 0.0, r0, z0, 0.8 * q.t_star, 40);
    CHECK(max_drift(conserved_swirl(q, cf)) <= 1e-9);
  }
  const auto num = flow_numeric(make(1.5, -2.0, 2.0), 0.0, 0.7, 0.3, 1.6, 1e-3);
  CHECK(max_drift(conserved_swirl(make(1.5, -2.0, 2.0), num)) <= 1e-7);
}

TEST_CASE("perturbed swirl exponent breaks transport") {
  const SolutionParams p;
  auto c = PowerLawConstants::from(p);
  c.et += 0.05;
  const PowerLawFlow flow(c, p);
  const auto tr = trace_closed_form(p, 0.0, 1.0, 0.0, 0.5, 20);
  CHECK(max_drift(conserved_swirl(flow, tr)) > 1e-3);
  CHECK(max_drift(conserved_swirl(ExactFlow(p), tr)) <= 1e-12);
}

TEST_CASE("viscous variants are rejected") {
  const auto p = make(1.0, 1.0, 1.0, Variant::NSInverseR);
  const auto tr = trace_closed_form(SolutionParams{}, 0.0, 1.0, 0.0, 0.5, 4);
  CHECK(kind_of([&] { conserved_swirl(p, tr); }) == ErrorKind::Variant);
}

}  // TEST_SUITE
