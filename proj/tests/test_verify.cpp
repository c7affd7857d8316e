// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "cartan/verify.hpp"

using namespace cartan;

namespace {

VerifyConfig config(int n, int m = 1, int samples = 10) {
  VerifyConfig c;
  c.n = n;
  c.m = m;
  c.samples = samples;
  return c;
}

std::set<std::string> names(const VerificationReport& r) {
  std::set<std::string> out;
  for (const auto& c : r.checks) out.insert(c.check_name);
  return out;
}

}  // namespace

TEST_CASE("suite and mode names round-trip") {
  for (auto s : {Suite::clifford, Suite::bundle, Suite::curvature, Suite::lichnerowicz, Suite::killing, Suite::splitting, Suite::all})
    CHECK(parse_suite(to_string(s)) == s);
  CHECK(parse_mode("exact") == Mode::exact);
  CHECK(parse_mode("float") == Mode::floating);
  CHECK_THROWS_AS(parse_suite("nope"), Error);
  CHECK_THROWS_AS(parse_mode("double"), Error);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate(config(1, 0, 1)));
  CHECK_NOTHROW(validate(config(7, 6, 1)));
  for (auto bad : {config(0), config(8), config(3, -1), config(3, 7), config(3, 1, 0)}) {
    try {
      validate(bad);
      FAIL("accepted invalid config");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::usage);
    }
  }
  // Clifford alone goes one dimension further.
  CHECK(run_suite(Suite::clifford, config(8)).pass);
  CHECK_THROWS_AS(run_suite(Suite::bundle, config(8)), Error);
}

TEST_CASE("every suite passes in both modes") {
  for (int n = 1; n <= 4; ++n)
    for (auto mode : {Mode::exact, Mode::floating}) {
      auto c = config(n, n <= 2 ? 2 : 1);
      c.mode = mode;
      const auto r = run_suite(Suite::all, c);
      for (const auto& ch : r.checks) {
        INFO(ch.check_name << " n=" << n << " residual " << ch.residual);
        CHECK(ch.pass);
      }
      CHECK(r.pass);
    }
}

TEST_CASE("suites report their checks") {
  const auto c = config(3);
  const auto cl = names(run_suite(Suite::clifford, c));
  CHECK(cl.count("clifford.generator_relations") == 1);
  CHECK(cl.count("clifford.representation_relations.pauli") == 1);
  CHECK(cl.count("clifford.representation_relations.cartan") == 1);
  CHECK(cl.count("clifford.cartan_span_dimension") == 1);
  CHECK(names(run_suite(Suite::clifford, config(4))).count("clifford.representation_relations.dirac") == 1);
  const auto k = names(run_suite(Suite::killing, c));
  for (const char* s : {"killing.minus_half", "killing.plus_half", "killing.dirac_eigenvalue", "killing.rejects_other_lambda"})
    CHECK(k.count(s) == 1);
  const auto sp = run_suite(Suite::splitting, config(3, 1, 1));
  CHECK(sp.checks.back().samples == 20);
}

TEST_CASE("reports are deterministic and seed-dependent") {
  auto c = config(3);
  const auto a = to_json(run_suite(Suite::all, c)).dump();
  const auto b = to_json(run_suite(Suite::all, c)).dump();
  CHECK(a == b);
  // A suite's stream does not depend on what ran before it.
  const auto alone = run_suite(Suite::bundle, c);
  const auto all = run_suite(Suite::all, c);
  std::size_t matched = 0;
  for (const auto& ch : all.checks)
    for (const auto& x : alone.checks)
      if (ch.check_name == x.check_name) {
        CHECK(to_json(ch).dump() == to_json(x).dump());
        ++matched;
      }
  CHECK(matched == alone.checks.size());
  c.seed = 2;
  c.mode = Mode::floating;
  auto c1 = c;
  c1.seed = 1;
  CHECK(to_json(run_suite(Suite::bundle, c)).dump() != to_json(run_suite(Suite::bundle, c1)).dump());
}

TEST_CASE("json and text rendering") {
  const auto r = run_suite(Suite::splitting, config(2));
  const auto j = to_json(r);
  CHECK(j["suite"] == "splitting");
  CHECK(j["pass"] == true);
  REQUIRE(j["checks"].size() == r.checks.size());
  const auto& c0 = j["checks"][0];
  for (const char* key : {"check_name", "n", "samples", "max_residual", "threshold", "pass"}) CHECK(c0.contains(key));
  const auto cfg = to_json(config(3, 2, 5));
  CHECK(cfg["n"] == 3);
  CHECK(cfg["mode"] == "exact");
  const auto text = render_text(r);
  CHECK(text.find("splitting.parity_behavior") != std::string::npos);
}
