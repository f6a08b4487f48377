#include "eulerlab/eulerlab.h"

#include <memory>
#include <new>
#include <string>

#include "eulerlab/exact_solutions.hpp"
#include "eulerlab/residuals.hpp"
#include "eulerlab/runner.hpp"

struct eul_config {
  eulerlab::RunConfig cfg;
};

struct eul_result {
  eulerlab::RunResult res;
  std::string json;
};

namespace {

thread_local std::string last_error;

eul_status map_kind(eulerlab::ErrorKind k) {
  using eulerlab::ErrorKind;
  switch (k) {
    case ErrorKind::Domain: return EUL_ERR_DOMAIN;
    case ErrorKind::Param: return EUL_ERR_PARAM;
    case ErrorKind::Variant: return EUL_ERR_VARIANT;
    case ErrorKind::MissingField: return EUL_ERR_MISSING_FIELD;
    case ErrorKind::UnsupportedForm: return EUL_ERR_UNSUPPORTED_FORM;
    case ErrorKind::NoConvergence: return EUL_ERR_NO_CONVERGENCE;
    case ErrorKind::Step: return EUL_ERR_STEP;
    case ErrorKind::FootOutsideDomain: return EUL_ERR_FOOT_OUTSIDE_DOMAIN;
    case ErrorKind::CflViolation: return EUL_ERR_CFL_VIOLATION;
    case ErrorKind::DegenerateFit: return EUL_ERR_DEGENERATE_FIT;
    case ErrorKind::Config: return EUL_ERR_CONFIG;
    case ErrorKind::Parse: return EUL_ERR_PARSE;
    case ErrorKind::Overflow: return EUL_ERR_OVERFLOW;
  }
  return EUL_ERR_INTERNAL;
}

template <class F>
eul_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return EUL_OK;
  } catch (const eulerlab::Error& e) {
    last_error = e.what();
    return map_kind(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return EUL_ERR_INTERNAL;
}

eul_status null_arg(const char* what) {
  last_error = std::string(what) + " is null";
  return EUL_ERR_NULL_ARGUMENT;
}

eulerlab::SolutionParams convert(const eul_params& p) {
  eulerlab::SolutionParams s;
  s.a = p.a;
  s.k = p.k;
  s.t_star = p.t_star;
  s.nu = p.nu;
  switch (p.variant) {
    case EUL_EULER_SELFSIMILAR: s.variant = eulerlab::Variant::EulerSelfSimilar; break;
    case EUL_NS_INVERSE_R: s.variant = eulerlab::Variant::NSInverseR; break;
    case EUL_NS_DECAYING_SWIRL: s.variant = eulerlab::Variant::NSDecayingSwirl; break;
    default: eulerlab::fail(eulerlab::ErrorKind::Param, "unknown variant code");
  }
  return s;
}

}  // namespace

extern "C" {

const char* eul_version(void) { return eulerlab::library_version(); }

const char* eul_status_name(eul_status status) {
  switch (status) {
    case EUL_OK: return "ok";
    case EUL_ERR_DOMAIN: return "domain";
    case EUL_ERR_PARAM: return "param";
    case EUL_ERR_VARIANT: return "variant";
    case EUL_ERR_MISSING_FIELD: return "missing_field";
    case EUL_ERR_UNSUPPORTED_FORM: return "unsupported_form";
    case EUL_ERR_NO_CONVERGENCE: return "no_convergence";
    case EUL_ERR_STEP: return "step";
    case EUL_ERR_FOOT_OUTSIDE_DOMAIN: return "foot_outside_domain";
    case EUL_ERR_CFL_VIOLATION: return "cfl_violation";
    case EUL_ERR_DEGENERATE_FIT: return "degenerate_fit";
    case EUL_ERR_CONFIG: return "config";
    case EUL_ERR_PARSE: return "parse";
    case EUL_ERR_OVERFLOW: return "overflow";
    case EUL_ERR_NULL_ARGUMENT: return "null_argument";
    case EUL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* eul_last_error(void) { return last_error.c_str(); }

eul_params eul_params_default(void) { return {1.0, 1.0, 1.0, 0.0, EUL_EULER_SELFSIMILAR}; }

eul_status eul_eval_cyl(const eul_params* p, double t, double r, double z, double out[3]) {
  if (!p) return null_arg("params");
  if (!out) return null_arg("out");
  return guard([&] {
    const auto v = eulerlab::eval_cyl(convert(*p), {t, r, z});
    out[0] = v.vr;
    out[1] = v.vtheta;
    out[2] = v.vz;
  });
}

eul_status eul_eval_cart(const eul_params* p, double t, double x1, double x2, double x3,
                         double out[3]) {
  if (!p) return null_arg("params");
  if (!out) return null_arg("out");
  return guard([&] {
    const auto v = eulerlab::eval_cart(convert(*p), {t, x1, x2, x3});
    for (int i = 0; i < 3; ++i) out[i] = v[i];
  });
}

eul_status eul_pressure(const eul_params* p, double t, double r, double z, double* out) {
  if (!p) return null_arg("params");
  if (!out) return null_arg("out");
  return guard([&] { *out = eulerlab::pressure(convert(*p), {t, r, z}); });
}

eul_status eul_residual(const eul_params* p, const char* equation, double t, double r, double z,
                        double* out) {
  if (!p) return null_arg("params");
  if (!equation) return null_arg("equation");
  if (!out) return null_arg("out");
  return guard([&] {
    const auto id = eulerlab::parse_equation_id(equation);
    *out = eulerlab::residual_at(convert(*p), id, {t, r, z, 0.0}).max_abs();
  });
}

eul_status eul_config_new(eul_config** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new eul_config(); });
}

void eul_config_free(eul_config* config) { delete config; }

eul_status eul_config_set(eul_config* config, const char* key, const char* value) {
  if (!config) return null_arg("config");
  if (!key) return null_arg("key");
  if (!value) return null_arg("value");
  return guard([&] { config->cfg.set(key, value); });
}

eul_status eul_config_load_file(eul_config* config, const char* path) {
  if (!config) return null_arg("config");
  if (!path) return null_arg("path");
  return guard([&] { config->cfg.load_file(path); });
}

eul_status eul_config_validate(const eul_config* config) {
  if (!config) return null_arg("config");
  return guard([&] { config->cfg.validate(); });
}

size_t eul_config_key_count(void) { return eulerlab::config_keys().size(); }

const char* eul_config_key_name(size_t index) {
  const auto& keys = eulerlab::config_keys();
  return index < keys.size() ? keys[index].name : nullptr;
}

const char* eul_config_key_help(size_t index) {
  const auto& keys = eulerlab::config_keys();
  return index < keys.size() ? keys[index].help : nullptr;
}

eul_status eul_run(const eul_config* config, const char* command, eul_result** out) {
  if (!config) return null_arg("config");
  if (!command) return null_arg("command");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    auto r = std::make_unique<eul_result>();
    r->res = eulerlab::run(config->cfg, eulerlab::parse_command(command));
    r->json = r->res.report.dump(2);
    *out = r.release();
  });
}

int eul_result_pass(const eul_result* result) { return result && result->res.pass ? 1 : 0; }

const char* eul_result_report_json(const eul_result* result) {
  return result ? result->json.c_str() : nullptr;
}

const char* eul_result_summary(const eul_result* result) {
  return result ? result->res.summary.c_str() : nullptr;
}

size_t eul_result_file_count(const eul_result* result) {
  return result ? result->res.files.size() : 0;
}

const char* eul_result_file(const eul_result* result, size_t index) {
  if (!result || index >= result->res.files.size()) return nullptr;
  return result->res.files[index].c_str();
}

void eul_result_free(eul_result* result) { delete result; }

}  // extern "C"
