// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include "cartan/cartan.h"

#include <cstdio>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "cartan/verify.hpp"

using nlohmann::ordered_json;

struct cartan_session {
  cartan::VerifyConfig verify;
  cartan::BundleSelector space = cartan::BundleSelector::sphere;
  cartan::Suite suite = cartan::Suite::all;
  std::vector<ordered_json> verifications;
  std::vector<ordered_json> spectra;
  std::string json;
  std::string text;
  std::string error;
};

namespace {

thread_local std::string create_error;

ordered_json document(const cartan_session& s, const char* command) {
  ordered_json j;
  j["schema_version"] = cartan::schema_version;
  j["tool"] = "cartan";
  j["version"] = cartan::version_string;
  j["command"] = command;
  ordered_json cfg = cartan::to_json(s.verify);
  cfg["space"] = cartan::to_string(s.space);
  cfg["suite"] = cartan::to_string(s.suite);
  j["config"] = std::move(cfg);
  return j;
}

template <class F>
cartan_status guarded(cartan_session* s, F&& body) {
  if (s == nullptr) return CARTAN_ERR_USAGE;
  try {
    body();
    s->error.clear();
    return CARTAN_OK;
  } catch (const cartan::Error& e) {
    s->error = e.what();
    return static_cast<cartan_status>(static_cast<int>(e.code()));
  } catch (const nlohmann::json::exception& e) {
    s->error = std::string("malformed result document: ") + e.what();
    return CARTAN_ERR_USAGE;
  } catch (const std::bad_alloc&) {
    s->error = "out of memory";
    return CARTAN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    s->error = e.what();
    return CARTAN_ERR_INTERNAL;
  }
}

bool verification_passes(const ordered_json& v) { return v.value("pass", false); }

std::string report_text(const std::vector<ordered_json>& verifications, const std::vector<ordered_json>& spectra, bool pass) {
  std::ostringstream os;
  char buf[160];
  for (const auto& v : verifications) {
    for (const auto& c : v["checks"]) {
      std::snprintf(buf, sizeof buf, "%-4s %-42s n=%d  residual %.3e\n", c["pass"].get<bool>() ? "ok" : "FAIL",
                    c["check_name"].get<std::string>().c_str(), c["n"].get<int>(), c["max_residual"].get<double>());
      os << buf;
    }
  }
  for (const auto& t : spectra) {
    os << "spectrum " << t["space"].get<std::string>() << " n=" << t["n"].get<int>() << " m=" << t["m"].get<int>() << ":";
    for (const auto& e : t["entries"]) {
      std::snprintf(buf, sizeof buf, " %g^%zu%s", e["eigenvalue"].get<double>(), e["multiplicity"].get<std::size_t>(),
                    e["truncated"].get<bool>() ? "*" : "");
      os << buf;
    }
    os << "\n";
  }
  os << "report: " << verifications.size() << " verification run(s), " << spectra.size() << " spectrum table(s), "
     << (pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace

extern "C" {

void cartan_config_default(cartan_config* config) {
  if (config == nullptr) return;
  config->n = 3;
  config->m = 2;
  config->space = "sphere";
  config->suite = "all";
  config->mode = "exact";
  config->samples = 100;
  config->seed = 1;
}

cartan_status cartan_session_create(const cartan_config* config, cartan_session** out) {
  if (out == nullptr) return CARTAN_ERR_USAGE;
  *out = nullptr;
  if (config == nullptr) return CARTAN_ERR_USAGE;
  cartan_session* s = nullptr;
  try {
    s = new cartan_session;
  } catch (const std::bad_alloc&) {
    return CARTAN_ERR_INTERNAL;
  }
  const cartan_status st = guarded(s, [&] {
    s->verify.n = config->n;
    s->verify.m = config->m;
    s->verify.samples = config->samples;
    s->verify.seed = config->seed;
    s->verify.mode = cartan::parse_mode(config->mode ? config->mode : "exact");
    s->space = cartan::parse_selector(config->space ? config->space : "sphere");
    s->suite = cartan::parse_suite(config->suite ? config->suite : "all");
    cartan::validate(s->verify);
  });
  if (st != CARTAN_OK) {
    create_error = s->error;
    delete s;
    return st;
  }
  create_error.clear();
  *out = s;
  return CARTAN_OK;
}

void cartan_session_destroy(cartan_session* session) { delete session; }

cartan_status cartan_verify(cartan_session* s, int* all_pass) {
  return guarded(s, [&] {
    const auto rep = cartan::run_suite(s->suite, s->verify);
    ordered_json v = cartan::to_json(rep);
    ordered_json doc = document(*s, "verify");
    doc["verification"] = v;
    doc["pass"] = rep.pass;
    s->verifications.push_back(std::move(v));
    s->json = doc.dump(2) + "\n";
    s->text = cartan::render_text(rep);
    if (all_pass) *all_pass = rep.pass ? 1 : 0;
  });
}

cartan_status cartan_spectrum(cartan_session* s, const char* space) {
  return guarded(s, [&] {
    const auto sel = space ? cartan::parse_selector(space) : s->space;
    const auto table = cartan::compute_spectrum(s->verify.n, sel, s->verify.m, s->verify.mode);
    ordered_json t = cartan::to_json(table);
    ordered_json doc = document(*s, "spectrum");
    doc["config"]["space"] = cartan::to_string(sel);
    doc["spectra"] = ordered_json::array({t});
    s->spectra.push_back(std::move(t));
    s->json = doc.dump(2) + "\n";
    s->text = cartan::render_text(table);
  });
}

cartan_status cartan_add_result_json(cartan_session* s, const char* json) {
  return guarded(s, [&] {
    if (json == nullptr) throw cartan::Error(cartan::ErrorCode::usage, "no document given");
    const auto doc = ordered_json::parse(json);
    if (!doc.is_object() || doc.value("schema_version", 0) != cartan::schema_version)
      throw cartan::Error(cartan::ErrorCode::usage, "document is not a schema v1 cartan result");
    const std::string cmd = doc.value("command", "");
    if (cmd != "verify" && cmd != "spectrum" && cmd != "report")
      throw cartan::Error(cartan::ErrorCode::usage, "document has unknown command '" + cmd + "'");
    if (doc.contains("verification")) {
      const auto& v = doc["verification"];
      if (v.is_array())
        for (const auto& x : v) s->verifications.push_back(x);
      else
        s->verifications.push_back(v);
    }
    if (doc.contains("spectra"))
      for (const auto& t : doc["spectra"]) s->spectra.push_back(t);
  });
}

cartan_status cartan_report(cartan_session* s, int recompute, int* all_pass) {
  return guarded(s, [&] {
    if (recompute) {
      s->verifications.push_back(cartan::to_json(cartan::run_suite(s->suite, s->verify)));
      for (auto sel : {cartan::BundleSelector::sphere, cartan::BundleSelector::rp_plus, cartan::BundleSelector::rp_minus})
        s->spectra.push_back(cartan::to_json(cartan::compute_spectrum(s->verify.n, sel, s->verify.m, s->verify.mode)));
    }
    if (s->verifications.empty() && s->spectra.empty())
      throw cartan::Error(cartan::ErrorCode::usage, "no results to report: pass --recompute or --from <result.json>");
    bool pass = true;
    for (const auto& v : s->verifications) pass = pass && verification_passes(v);
    ordered_json doc = document(*s, "report");
    doc["verification"] = s->verifications;
    doc["spectra"] = s->spectra;
    doc["pass"] = pass;
    s->json = doc.dump(2) + "\n";
    s->text = report_text(s->verifications, s->spectra, pass);
    if (all_pass) *all_pass = pass ? 1 : 0;
  });
}

const char* cartan_result_json(const cartan_session* s) { return s ? s->json.c_str() : ""; }
const char* cartan_result_text(const cartan_session* s) { return s ? s->text.c_str() : ""; }
const char* cartan_last_error(const cartan_session* s) { return s ? s->error.c_str() : create_error.c_str(); }

const char* cartan_status_string(cartan_status status) {
  switch (status) {
    case CARTAN_OK: return "ok";
    case CARTAN_ERR_SIZE: return "size";
    case CARTAN_ERR_ALGEBRA_MISMATCH: return "algebra_mismatch";
    case CARTAN_ERR_REPRESENTATION_KIND: return "representation_kind";
    case CARTAN_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case CARTAN_ERR_TANGENCY: return "tangency";
    case CARTAN_ERR_FRAME: return "frame";
    case CARTAN_ERR_DEGREE_BOUND: return "degree_bound";
    case CARTAN_ERR_ZERO_SPINOR: return "zero_spinor";
    case CARTAN_ERR_OVERFLOW: return "overflow";
    case CARTAN_ERR_IO: return "io";
    case CARTAN_ERR_USAGE: return "usage";
    case CARTAN_ERR_NUMERIC: return "numeric";
    case CARTAN_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* cartan_version(void) { return cartan::version_string; }

}  // extern "C"
