#include "eulerlab/report_json.hpp"

namespace eulerlab {

using nlohmann::json;

json to_json_value(const SolutionParams& p) {
  return {{"a", p.a}, {"k", p.k}, {"t_star", p.t_star}, {"nu", p.nu},
          {"variant", to_string(p.variant)}};
}

json to_json_value(const SamplePoint& p) { return {{"t", p.t}, {"r", p.r}, {"z", p.z}}; }

json to_json_value(const EquationResult& e) {
  return {{"equation", to_string(e.equation)},
          {"max_abs_residual", e.max_abs_residual},
          {"argmax", to_json_value(e.argmax)},
          {"largest_term", e.largest_term},
          {"samples", e.samples},
          {"pass", e.pass}};
}

json to_json_value(const ResidualReport& r) {
  json eqs = json::array();
  for (const auto& e : r.equations) eqs.push_back(to_json_value(e));
  return {{"flow", r.flow},
          {"params", to_json_value(r.params)},
          {"sampling",
           {{"r_lo", r.sampling.r_lo},
            {"r_hi", r.sampling.r_hi},
            {"z_lo", r.sampling.z_lo},
            {"z_hi", r.sampling.z_hi},
            {"t_hi", r.sampling.t_hi},
            {"count", r.sampling.count},
            {"seed", r.sampling.seed}}},
          {"tol", r.tol},
          {"diff_mode", r.diff.mode == DiffMode::ExactJet ? "exact_jet" : "central_difference"},
          {"residuals", eqs},
          {"pass", r.pass}};
}

}  // namespace eulerlab
