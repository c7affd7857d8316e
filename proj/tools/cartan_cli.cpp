// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

// cartan: verification suites and Dirac spectra from the command line.
//
// Exit status: 0 pass, 1 check failure, 2 usage or configuration error,
// 3 I/O or runtime error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cartan/cartan.h"

namespace fs = std::filesystem;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_runtime = 3;
constexpr const char* out_dir_env = "CARTAN_OUT_DIR";

struct Options {
  int n = 3;
  int m = 2;
  std::string space = "sphere";
  std::string suite = "all";
  std::string mode = "exact";
  int samples = 100;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  bool recompute = false;
  bool all = false;
  std::vector<std::string> from;
};

int status_exit(cartan_status st) {
  switch (st) {
    case CARTAN_OK: return exit_pass;
    case CARTAN_ERR_USAGE:
    case CARTAN_ERR_SIZE: return exit_usage;
    case CARTAN_ERR_DEGREE_BOUND: return exit_failure;
    default: return exit_runtime;
  }
}

int fail(cartan_session* s, cartan_status st) {
  std::cerr << "cartan: " << cartan_status_string(st) << " error: " << cartan_last_error(s) << "\n";
  if (st == CARTAN_ERR_DEGREE_BOUND) std::cerr << "cartan: hint: rerun with a larger --m\n";
  return status_exit(st);
}

struct IoError {
  std::string message;
};

// Resolves where a command's output goes. Empty result means stdout.
fs::path output_path(const Options& o, const std::string& default_name, bool always_file) {
  fs::path p;
  if (!o.out.empty()) {
    p = o.out;
    if (fs::is_directory(p)) p /= default_name;
  } else if (const char* dir = std::getenv(out_dir_env); dir != nullptr && *dir != '\0') {
    p = fs::path(dir) / default_name;
  } else if (always_file) {
    p = default_name;
  } else {
    return {};
  }
  const fs::path parent = p.has_parent_path() ? p.parent_path() : fs::path(".");
  if (!fs::is_directory(parent)) throw IoError{"output directory does not exist: " + parent.string() + " (for " + p.string() + ")"};
  return p;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError{"cannot open " + p.string() + " for writing"};
  f << content;
  if (!f) throw IoError{"write failed: " + p.string()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError{"cannot read " + path};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const Options& o, cartan_session* s, const std::string& command) {
  const bool json = o.format == "json";
  const std::string body = json ? cartan_result_json(s) : cartan_result_text(s);
  const fs::path p = output_path(o, "cartan_" + command + (json ? ".json" : ".txt"), false);
  if (p.empty())
    std::cout << body;
  else
    write_file(p, body);
}

cartan_session* open_session(const Options& o, cartan_status& st) {
  cartan_config cfg;
  cartan_config_default(&cfg);
  cfg.n = o.n;
  cfg.m = o.m;
  cfg.space = o.space.c_str();
  cfg.suite = o.suite.c_str();
  cfg.mode = o.mode.c_str();
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cartan_session* s = nullptr;
  st = cartan_session_create(&cfg, &s);
  return s;
}

int run(const std::string& command, const Options& o) {
  cartan_status st = CARTAN_OK;
  cartan_session* s = open_session(o, st);
  if (s == nullptr) {
    std::cerr << "cartan: invalid configuration: " << cartan_last_error(nullptr) << "\n";
    return status_exit(st);
  }
  struct Guard {
    cartan_session* s;
    ~Guard() { cartan_session_destroy(s); }
  } guard{s};

  try {
    if (command == "verify") {
      int pass = 0;
      st = cartan_verify(s, &pass);
      if (st != CARTAN_OK) return fail(s, st);
      emit(o, s, command);
      return pass ? exit_pass : exit_failure;
    }
    if (command == "spectrum") {
      st = cartan_spectrum(s, nullptr);
      if (st != CARTAN_OK) return fail(s, st);
      emit(o, s, command);
      return exit_pass;
    }
    // report
    for (const auto& f : o.from) {
      st = cartan_add_result_json(s, read_file(f).c_str());
      if (st != CARTAN_OK) {
        std::cerr << "cartan: " << f << ": ";
        return fail(s, st);
      }
    }
    int pass = 0;
    st = cartan_report(s, (o.recompute || o.all) ? 1 : 0, &pass);
    if (st != CARTAN_OK) return fail(s, st);
    const fs::path p = output_path(o, "cartan_report.json", true);
    write_file(p, cartan_result_json(s));
    if (o.format == "text") std::cout << cartan_result_text(s);
    std::cout << "wrote " << p.string() << "\n";
    return pass ? exit_pass : exit_failure;
  } catch (const IoError& e) {
    std::cerr << "cartan: io error: " << e.message << "\n";
    return exit_runtime;
  } catch (const std::exception& e) {
    std::cerr << "cartan: error: " << e.what() << "\n";
    return exit_runtime;
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "sphere dimension (1..7)");
  sub->add_option("--m", o.m, "degree bound (0..6)");
  sub->add_option("--space", o.space, "sphere | rp_plus | rp_minus");
  sub->add_option("--suite", o.suite, "clifford | bundle | curvature | lichnerowicz | killing | splitting | all");
  sub->add_option("--mode", o.mode, "exact | float");
  sub->add_option("--samples", o.samples, "random samples per check");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out, std::string("output file or directory (default: $") + out_dir_env + ")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spinor bundles over spheres and real projective spaces: verification and Dirac spectra"};
  app.set_version_flag("--version", std::string(cartan_version()));
  app.require_subcommand(1);
  Options o;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  auto* spectrum = app.add_subcommand("spectrum", "spectrum of the Dirac operator");
  auto* report = app.add_subcommand("report", "bundle results into one JSON report");
  add_common(verify, o);
  add_common(spectrum, o);
  add_common(report, o);
  report->add_flag("--recompute", o.recompute, "compute the configured suite and all three spectra");
  report->add_flag("--all", o.all, "same as --recompute with --suite all");
  report->add_option("--from", o.from, "result JSON files from earlier verify/spectrum runs");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }
  if (o.all) o.suite = "all";
  const std::string command = verify->parsed() ? "verify" : spectrum->parsed() ? "spectrum" : "report";
  return run(command, o);
}
