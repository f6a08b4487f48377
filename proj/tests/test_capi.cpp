// Exercises the shared library through its C header only.
#include <eulerlab/eulerlab.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

namespace {

int failures = 0;

void check(bool ok, const char* what) {
  if (!ok) {
    std::printf("FAIL: %s (%s)\n", what, eul_last_error());
    ++failures;
  }
}

}  // namespace

int main() {
  check(std::strncmp(eul_version(), "eulerlab", 8) == 0, "version");
  check(std::strcmp(eul_status_name(EUL_ERR_PARAM), "param") == 0, "status name");

  eul_params p = eul_params_default();
  check(p.a == 1.0 && p.k == 1.0 && p.t_star == 1.0 && p.variant == EUL_EULER_SELFSIMILAR,
        "defaults");

  double v[3];
  check(eul_eval_cyl(&p, 0.5, 2.0, 0.25, v) == EUL_OK, "eval_cyl status");
  check(std::abs(v[0] - 4.0) <= 1e-14 && std::abs(v[1] - 0.5) <= 1e-14 &&
            std::abs(v[2] + 1.0) <= 1e-14,
        "eval_cyl values");
  check(eul_eval_cart(&p, 0.0, 1.0, 0.0, 0.0, v) == EUL_OK, "eval_cart status");
  check(std::abs(v[0] - 1.0) <= 1e-14 && std::abs(v[1] + 1.0) <= 1e-14 && v[2] == 0.0,
        "eval_cart values");

  double pr = 1.0;
  check(eul_pressure(&p, 0.3, 1.0, 0.0, &pr) == EUL_OK && std::abs(pr) <= 1e-15, "gauge");

  double res = 1.0;
  check(eul_residual(&p, "SwirlTransport", 0.2, 1.1, 0.3, &res) == EUL_OK && res <= 1e-12,
        "residual");
  check(eul_residual(&p, "Nonsense", 0.2, 1.1, 0.3, &res) == EUL_ERR_CONFIG, "bad equation");

  eul_params bad = p;
  bad.a = 0.0;
  check(eul_eval_cyl(&bad, 0.0, 1.0, 0.0, v) == EUL_ERR_PARAM, "a = 0 rejected");
  check(std::strstr(eul_last_error(), "a must be nonzero") != nullptr, "a = 0 message");
  check(eul_eval_cyl(&p, 1.0, 1.0, 0.0, v) == EUL_ERR_DOMAIN, "t = t_star rejected");
  check(eul_eval_cyl(nullptr, 0.0, 1.0, 0.0, v) == EUL_ERR_NULL_ARGUMENT, "null params");

  eul_config* cfg = nullptr;
  check(eul_config_new(&cfg) == EUL_OK && cfg != nullptr, "config_new");
  check(eul_config_key_count() >= 16, "key count");
  check(std::strcmp(eul_config_key_name(0), "a") == 0, "first key");
  check(eul_config_key_name(10000) == nullptr, "key out of range");
  check(eul_config_set(cfg, "samples", "100") == EUL_OK, "set samples");
  check(eul_config_set(cfg, "bogus", "1") == EUL_ERR_CONFIG, "unknown key");
  check(eul_config_validate(cfg) == EUL_OK, "validate");

  eul_result* r = nullptr;
  check(eul_run(cfg, "verify", &r) == EUL_OK && r != nullptr, "run verify");
  if (r) {
    check(eul_result_pass(r) == 1, "verify passes");
    const std::string json = eul_result_report_json(r);
    check(json.find("\"residuals\"") != std::string::npos, "report has residuals");
    check(eul_result_file_count(r) == 0, "no files without output_dir");
    check(eul_result_file(r, 5) == nullptr, "file out of range");
    eul_result_free(r);
  }
  r = nullptr;
  check(eul_run(cfg, "dance", &r) == EUL_ERR_CONFIG && r == nullptr, "bad command");
  check(eul_config_set(cfg, "a", "0") == EUL_OK, "set a = 0");
  check(eul_config_validate(cfg) == EUL_ERR_PARAM, "validate a = 0");
  eul_config_free(cfg);
  eul_config_free(nullptr);
  eul_result_free(nullptr);

  if (failures == 0) std::printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
