// Command-line front end. Uses only the C interface of libeulerlab.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eulerlab/eulerlab.h"

namespace {

struct Settings {
  std::string config_file;
  std::map<std::string, std::string> values;  // key -> value given on the command line
  bool quiet = false;
};

std::string flag_name(std::string key) {
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  return key;
}

void add_keys(CLI::App* sub, Settings& s) {
  sub->add_option("-c,--config", s.config_file, "flat key = value file; flags override it");
  sub->add_flag("-q,--quiet", s.quiet, "do not print the summary");
  for (size_t i = 0; i < eul_config_key_count(); ++i) {
    const std::string key = eul_config_key_name(i);
    std::string names = "--" + flag_name(key);
    if (flag_name(key) != key) names += ",--" + key;
    if (key == "derive_preset") names += ",--preset";
    sub->add_option_function<std::string>(
           names, [&s, key](const std::string& v) { s.values[key] = v; }, eul_config_key_help(i))
        ->type_name("VALUE");
  }
}

int fail_config(const char* what) {
  std::fprintf(stderr, "error: %s\n", what);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification lab for self-similar blowup solutions of axisymmetric Euler"};
  app.set_version_flag("--version", std::string(eul_version()));
  app.require_subcommand(1);
  app.footer("Output goes to $EULERLAB_OUTPUT_DIR if set, else ./eulerlab-out; the output_dir key\n"
             "in a config file or --output-dir on the command line overrides both.");

  Settings settings;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"verify", "residuals of the governing equations at seeded sample points"},
      {"derive", "replay the power-law ansatz derivation and print the solved family"},
      {"trace", "closed-form and RK4 particle paths, conserved r vtheta (trace.csv)"},
      {"simulate", "semi-Lagrangian swirl transport against the exact solution"},
      {"diagnose", "blowup exponent fits, BKM integral and energy scaling"},
      {"all", "every check above"},
  };
  std::string chosen;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_keys(sub, settings);
    sub->callback([&chosen, n = name] { chosen = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  eul_config* cfg = nullptr;
  if (eul_config_new(&cfg) != EUL_OK) return fail_config(eul_last_error());
  struct Free {
    eul_config* c;
    ~Free() { eul_config_free(c); }
  } free_cfg{cfg};

  // Reports go to ./eulerlab-out unless the environment or the config says otherwise.
  const char* env = std::getenv("EULERLAB_OUTPUT_DIR");
  eul_config_set(cfg, "output_dir", env && *env ? env : "eulerlab-out");
  if (!settings.config_file.empty() &&
      eul_config_load_file(cfg, settings.config_file.c_str()) != EUL_OK) {
    return fail_config(eul_last_error());
  }
  for (const auto& [key, value] : settings.values) {
    if (eul_config_set(cfg, key.c_str(), value.c_str()) != EUL_OK) {
      return fail_config(eul_last_error());
    }
  }

  eul_result* result = nullptr;
  if (eul_run(cfg, chosen.c_str(), &result) != EUL_OK) return fail_config(eul_last_error());
  const bool pass = eul_result_pass(result) != 0;
  if (!settings.quiet) std::fputs(eul_result_summary(result), stdout);
  for (size_t i = 0; i < eul_result_file_count(result); ++i) {
    if (!settings.quiet) std::printf("wrote %s\n", eul_result_file(result, i));
  }
  eul_result_free(result);
  return pass ? 0 : 1;
}
