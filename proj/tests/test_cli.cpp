#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hopfgalois/cli.hpp"

using namespace hopfgalois;

namespace {

std::string fixture_path(const char* name) {
  return std::string(HOPFGALOIS_FIXTURE_DIR) + "/" + name;
}

RunConfig base_config(const char* command, const char* fixture) {
  RunConfig c;
  c.command = command;
  c.fixture_path = fixture_path(fixture);
  c.seed = 7;
  c.samples = 5;
  c.box = 1;
  return c;
}

}  // namespace

TEST_CASE("enumerate: trivial census of size one") {
  RunResult r = run_command(base_config("enumerate", "split_c1.json"));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report.at("results").at("count") == 1);
}

TEST_CASE("enumerate: S3 census flags lambda and rho as distinct entries") {
  RunResult r = run_command(base_config("enumerate", "split_s3.json"));
  CHECK(r.exit_code == kExitOk);
  const Json& census = r.report.at("results").at("census");
  int lam = 0, rho = 0, both = 0;
  for (const auto& e : census) {
    if (e.at("is_lambda").get<bool>())
      ++lam;
    if (e.at("is_rho").get<bool>())
      ++rho;
    if (e.at("is_lambda").get<bool>() && e.at("is_rho").get<bool>())
      ++both;
    CHECK(e.at("normalized_by_lambda").get<bool>());
    CHECK(e.at("regular").get<bool>());
  }
  CHECK(lam == 1);
  CHECK(rho == 1);
  CHECK(both == 0);
}

TEST_CASE("nbg: full agreement on every shipped context") {
  for (const char* fx : {"split_s3.json", "field_s3.json"}) {
    RunConfig c = base_config("nbg", fx);
    RunResult r = run_command(c);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report.at("results").at("all_agree").get<bool>());
    CHECK(r.report.at("results").at("agreements") == c.samples);
  }
}

TEST_CASE("theorem: split S3 exits zero with both sides certified") {
  RunResult r = run_command(base_config("theorem", "split_s3.json"));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report.at("results").at("verdict") == "both-free");
  CHECK(r.report.at("results").contains("cert_kg"));
  CHECK(r.report.at("results").contains("cert_hlambda"));
}

TEST_CASE("theorem: scaled lattice behaves identically") {
  RunResult r = run_command(base_config("theorem", "split_s3_scaled.json"));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report.at("results").at("verdict") == "both-free");
}

TEST_CASE("reports are byte-identical under a fixed config") {
  for (const char* cmd : {"enumerate", "nbg", "theorem"}) {
    RunConfig c = base_config(cmd, "split_s3.json");
    std::string a = render_report(run_command(c).report, "json");
    std::string b = render_report(run_command(c).report, "json");
    CHECK(a == b);
  }
}

TEST_CASE("markdown rendering is deterministic and non-json") {
  RunConfig c = base_config("enumerate", "split_s3.json");
  c.format = "markdown";
  RunResult r = run_command(c);
  std::string md = render_report(r.report, c.format);
  CHECK(md.rfind("# report", 0) == 0);
  CHECK(md == render_report(run_command(c).report, c.format));
}

TEST_CASE("verify-only pass revalidates an emitted report") {
  RunConfig c = base_config("theorem", "field_s3.json");
  c.box = 2;
  RunResult first = run_command(c);
  REQUIRE(first.exit_code == kExitOk);
  std::string path = "cli_verify_roundtrip.json";
  {
    std::ofstream out(path);
    out << render_report(first.report, "json");
  }
  RunConfig v = c;
  v.verify_only = path;
  RunResult second = run_command(v);
  CHECK(second.exit_code == kExitOk);
  CHECK(second.report.at("results").at("all_valid").get<bool>());
  CHECK(second.report.at("results").at("certificates_checked") == 2);
  std::remove(path.c_str());
}

TEST_CASE("verify-only rejects a tampered certificate") {
  RunConfig c = base_config("theorem", "split_s3.json");
  RunResult first = run_command(c);
  REQUIRE(first.exit_code == kExitOk);
  Json tampered = first.report;
  tampered["results"]["cert_kg"]["images"][0][0] = "41";
  std::string path = "cli_verify_tampered.json";
  {
    std::ofstream out(path);
    out << tampered.dump(2) << "\n";
  }
  RunConfig v = c;
  v.verify_only = path;
  RunResult second = run_command(v);
  CHECK(second.exit_code == kExitContradiction);
  CHECK_FALSE(second.report.at("results").at("all_valid").get<bool>());
  std::remove(path.c_str());
}

TEST_CASE("exit codes: invalid fixture and budget") {
  RunConfig c = base_config("theorem", "no_such_file.json");
  CHECK(run_command(c).exit_code == kExitFixtureInvalid);

  // Corrupted fixture: break the group table.
  Json fx;
  {
    std::ifstream in(fixture_path("split_s3.json"));
    in >> fx;
  }
  fx["context"]["group"]["table"][0][0] = 1;
  RunConfig c2 = base_config("theorem", "unused");
  RunResult r2 = run_command(c2, fx);
  CHECK(r2.exit_code == kExitFixtureInvalid);
  CHECK(r2.report.contains("error"));

  // Wrong-typed field: still a clean fixture-invalid exit.
  Json typed = fx;
  typed["context"]["group"]["order"] = "six";
  RunResult r3 = run_command(c2, typed);
  CHECK(r3.exit_code == kExitFixtureInvalid);
  CHECK(r3.report.contains("error"));

  // Budget: order-16 cyclic group.
  Json big;
  std::vector<std::vector<std::size_t>> t(16, std::vector<std::size_t>(16));
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      t[i][j] = (i + j) % 16;
  big["group"]["order"] = 16;
  big["group"]["identity"] = 0;
  big["group"]["table"] = t;
  RunConfig c3 = base_config("enumerate", "unused");
  CHECK(run_command(c3, big).exit_code == kExitBudgetExceeded);
}

TEST_CASE("hopf-order command reports both ambients") {
  RunResult r = run_command(base_config("hopf-order", "split_s3.json"));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report.at("results").at("kg").at("is_hopf_order").get<bool>());
  CHECK(r.report.at("results").at("hlambda").contains("is_hopf_order"));
  // The K[G]-side order of the standard lattice is the integral group
  // ring, which is certainly a Hopf order; the H_lambda verdict is
  // recorded, not predicted.
  const Json& basis = r.report.at("results").at("hlambda").at("basis");
  CHECK(basis.size() == 6);
  for (const auto& h : basis) {
    CHECK(h.contains("N"));
    CHECK(h.at("coeffs").size() == 6);
  }
}

TEST_CASE("unknown command is an input error") {
  RunConfig c = base_config("frobnicate", "split_s3.json");
  CHECK(run_command(c).exit_code == kExitFixtureInvalid);
}

TEST_CASE("a lattice that is not G-stable is rejected with a witness") {
  Json fx;
  {
    std::ifstream in(fixture_path("split_s3.json"));
    in >> fx;
  }
  // Stretch one basis direction only; the G-action escapes the lattice.
  fx["lattice"] = {{"dim", 6},
                   {"den", 1},
                   {"basis", Json::array({Json::array({"2", "0", "0", "0", "0", "0"}),
                                          Json::array({"0", "1", "0", "0", "0", "0"}),
                                          Json::array({"0", "0", "1", "0", "0", "0"}),
                                          Json::array({"0", "0", "0", "1", "0", "0"}),
                                          Json::array({"0", "0", "0", "0", "1", "0"}),
                                          Json::array({"0", "0", "0", "0", "0", "1"})})}};
  RunConfig c = base_config("theorem", "unused");
  RunResult r = run_command(c, fx);
  CHECK(r.exit_code == kExitFixtureInvalid);
  std::string err = r.report.at("error").get<std::string>();
  CHECK(err.find("not G-stable") != std::string::npos);
}
