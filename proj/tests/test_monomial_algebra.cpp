#include <doctest.h>

#include <random>

#include "eulerlab/derivation.hpp"
#include "eulerlab/exponent_solver.hpp"
#include "eulerlab/flow.hpp"
#include "eulerlab/monomial.hpp"
#include "eulerlab/residuals.hpp"

using namespace eulerlab;

namespace {

MonomialSum P(const std::string& s) { return MonomialSum::parse(s); }
Poly sym(const std::string& s) { return Poly::symbol(s); }
Poly num(long n, long d = 1) { return Poly(Rational(n, d)); }

std::string value_of(const ExponentSolution& s, const std::string& name) {
  const auto v = s.value(name);
  return v ? v->str() : "<none>";
}

}  // namespace

TEST_SUITE("monomial_algebra") {

TEST_CASE("power rule and tau chain rule") {
  CHECK(differentiate(P("r^2"), Var::R) == P("2*r"));
  CHECK(differentiate(P("tau^-1"), Var::T) == P("tau^-2"));
  CHECK(differentiate(P("a*r*z*tau^-1"), Var::R) == P("a*z*tau^-1"));
  CHECK(differentiate(P("5"), Var::Z).is_zero());
  CHECK(differentiate(P("r^p"), Var::R) == P("p*r^(p - 1)"));
}

TEST_CASE("canonical form") {
  CHECK(P("a*r + b*z") == P("b*z + a*r"));
  CHECK(P("r + r") == P("2*r"));
  CHECK((P("r*z") - P("z*r")).is_zero());
  CHECK(P("r^2*z").terms().size() == 1);
  const auto s = P("z + r + tau^-1 + r^2");
  for (std::size_t i = 1; i < s.terms().size(); ++i) {
    const auto& a = s.terms()[i - 1].exps;
    const auto& b = s.terms()[i].exps;
    CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST_CASE("parser rejects unsupported input") {
  CHECK_THROWS_AS(P("r^(p*q)"), Error);
  try {
    P("r^(p*q)");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedForm);
  }
  CHECK_THROWS_AS(P("t^2"), Error);
  CHECK_THROWS_AS(P("r +"), Error);
  CHECK_THROWS_AS(P("r/(r + z)"), Error);
}

TEST_CASE("Leibniz rule on random sums") {
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4), len(1, 3);
  auto random_sum = [&] {
    MonomialSum s;
    for (int i = 0, n = len(gen); i < n; ++i) {
      Monomial m;
      m.coeff = num(c(gen) == 0 ? 1 : c(gen), 1 + (gen() % 3));
      m.exps = {LinearForm(Rational(e(gen), 2)), LinearForm(Rational(e(gen))),
                LinearForm(Rational(e(gen)))};
      s += MonomialSum(m);
    }
    return s;
  };
  for (int n = 0; n < 100; ++n) {
    const auto f = random_sum();
    const auto g = random_sum();
    for (Var v : {Var::R, Var::Z, Var::T}) {
      CHECK(differentiate(f * g, v) == differentiate(f, v) * g + f * differentiate(g, v));
    }
  }
}

TEST_CASE("operators on the blowup fields") {
  CHECK(apply_operator(Operator::Incompressibility,
                       {{"vr", P("a*r*tau^-1")}, {"vz", P("-2*a*z*tau^-1")}})
            .is_zero());
  CHECK(apply_operator(Operator::SwirlLaplacian, {{"psi", P("-a*r*z*tau^-1")}}).is_zero());
  CHECK(apply_operator(Operator::BiotSavartR, {{"psi", P("abar*r*z*tau^-1")}}) ==
        P("-abar*r*tau^-1"));
  CHECK(apply_operator(Operator::BiotSavartZ, {{"psi", P("abar*r*z*tau^-1")}}) ==
        P("2*abar*z*tau^-1"));
  CHECK_THROWS_AS(apply_operator(Operator::Incompressibility, {{"vr", P("r")}}), Error);
  try {
    apply_operator(Operator::SwirlTransport, {{"vr", P("r")}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingField);
  }
}

TEST_CASE("meridional stage") {
  const auto st = derive_stage("meridional", {{"vr", P("a*r^p*tau^-1")}, {"vz", P("b*z^q*tau^-1")}},
                               {"incompressibility"}, {"p", "q", "b"}, {"a"});
  REQUIRE(st.result.status != SolveStatus::NoSolution);
  const auto& s = st.result.primary();
  CHECK(value_of(s, "p") == "1");
  CHECK(value_of(s, "q") == "1");
  CHECK(value_of(s, "b") == "-2*a");
  CHECK(s.str() == "p=1, q=1, b=-2*a");
  CHECK(st.result.families.size() == 3);
}

TEST_CASE("stream function stage") {
  const auto st = derive_stage(
      "stream",
      {{"vr", P("a*r*tau^-1")}, {"vz", P("-2*a*z*tau^-1")}, {"psi", P("abar*r*z*tau^-1")}},
      {"vr = biot_savart_r", "vz = biot_savart_z"}, {"abar"}, {"a"});
  CHECK(st.result.status == SolveStatus::Solved);
  CHECK(value_of(st.result.primary(), "abar") == "-a");
}

TEST_CASE("swirl stage with fixed a") {
  auto swirl = [](const std::string& a) {
    FieldMap f{{"vr", P(a + "*r*tau^-1")},
               {"vz", P("-2*" + a + "*z*tau^-1")},
               {"psi", P("-" + a + "*r*z*tau^-1")},
               {"omega", MonomialSum()},
               {"vtheta", P("k*z^p1*r^q1*tau^-1")}};
    return derive_stage("swirl", f, {"swirl_transport", "d_z(vtheta)"}, {"p1", "q1"}, {"k"});
  };
  const auto one = swirl("1");
  CHECK(value_of(one.result.primary(), "p1") == "0");
  CHECK(value_of(one.result.primary(), "q1") == "-2");
  const auto half = swirl("(-1/2)");
  CHECK(value_of(half.result.primary(), "q1") == "1");
}

TEST_CASE("no solution and violated relation") {
  const auto st = derive_stage("bad", {{"vr", P("r*tau^-1")}, {"vz", P("z*tau^-1")}},
                               {"incompressibility"}, {}, {});
  CHECK(st.result.status == SolveStatus::NoSolution);
  CHECK(!st.result.violated.empty());
}

TEST_CASE("derivation replay with symbolic a") {
  const Derivation d = derive_euler();
  REQUIRE(d.stages.size() == 3);
  CHECK(d.stages[0].result.primary().str() == "p=1, q=1, b=-2*a");
  CHECK(d.stages[1].result.primary().str() == "abar=-a");
  CHECK(d.stages[1].derived.at("omega").is_zero());
  CHECK(value_of(d.stages[2].result.primary(), "p1") == "0");
  CHECK(value_of(d.stages[2].result.primary(), "q1") == "-(1 + 1/a)");
  // Collected coefficient of the swirl transport equation.
  const Poly rel = num(1) + sym("a") * sym("q1") - num(2) * sym("a") * sym("p1") + sym("a");
  CHECK(d.stages[2].result.system.contains(rel));
  CHECK(d.fields.at("vr") == P("a*r*tau^-1"));
  CHECK(d.fields.at("vz") == P("-2*a*z*tau^-1"));
  CHECK(d.fields.at("psi") == P("-a*r*z*tau^-1"));
}

TEST_CASE("concrete derivations pass the verifier") {
  for (const auto& [a_text, q1] : std::vector<std::pair<std::string, std::string>>{{"1", "-2"},
                                                                                   {"-1/2", "1"}}) {
    const Rational a = Rational::parse(a_text);
    const Derivation d = derive_euler(a);
    REQUIRE(d.concrete);
    CHECK(d.value("q1")->str() == q1);
    SolutionParams ref;
    ref.a = a.to_double();
    ref.k = 1.5;
    ref.t_star = 2.0;
    const MonomialFlow flow(d.fields, {{"k", ref.k}}, ref);
    const auto rep = verify(flow, applicable_equations(flow),
                            SamplingSpec::standard(ref.t_star, 300, 5), 1e-12);
    CHECK(rep.pass);
  }
  CHECK_THROWS_AS(derive_euler(Rational(0)), Error);
}

}  // TEST_SUITE
