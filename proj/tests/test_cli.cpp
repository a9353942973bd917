// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "riskattr/io.hpp"
#include "riskattr/models.hpp"
#include "riskattr/train.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* env = std::getenv("RISKATTR_CLI");
  REQUIRE_MESSAGE(env != nullptr, "RISKATTR_CLI must point at the CLI binary");
  return env;
}

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "riskattr_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli: price evaluates the bond and bsm closed forms") {
  const RunResult bond = run("price --model bond --point \"0.05,100\" --param T=10");
  CHECK(bond.exit_code == 0);
  CHECK(bond.out == "60.65307\n");

  const RunResult call = run("price --model bsm-call --point \"100,0.05,1,100,0.2\"");
  CHECK(call.exit_code == 0);
  CHECK(call.out.substr(0, 8) == "10.45058");
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("price --model mystery --point \"1\"").exit_code == 2);
  CHECK(run("price --model bond --point \"0.05\" --param T=10").exit_code == 2);
  CHECK(run("audit --axiom nonsense --method ig --model bond --baseline \"0,0\" "
            "--explicand \"0.3,100\" --grid r:0.3:0.5:2")
            .exit_code == 2);
}

TEST_CASE("cli: attribute writes deterministic json and plot csv") {
  const fs::path dir = scratch_dir();
  const fs::path out = dir / "attr.json";
  const fs::path plot = dir / "attr.csv";
  const std::string cmd =
      "attribute --model bsm-call --baseline \"1433.8,4.26,0.59,1396,0.23\" "
      "--explicand \"1344.8,3.09,0.2,1150,0.27\" --methods bshap,ig --out " +
      out.string() + " --plot " + plot.string();
  CHECK(run(cmd).exit_code == 0);

  const nlohmann::json doc = nlohmann::json::parse(riskattr::read_text_file(out.string()));
  REQUIRE(doc.at("results").size() == 2);
  CHECK(doc["results"][0]["method"] == "bshap");
  CHECK(doc["results"][1]["method"] == "ig");
  // stock and strike dwarf the rate attribution for both methods
  for (const auto& res : doc["results"]) {
    const auto a = res["attributions"].get<std::vector<double>>();
    CHECK(std::fabs(a[0]) >= 5.0 * std::fabs(a[1]));
    CHECK(std::fabs(a[3]) >= 5.0 * std::fabs(a[1]));
  }

  const std::string first = riskattr::read_text_file(out.string());
  CHECK(run(cmd).exit_code == 0);
  CHECK(riskattr::read_text_file(out.string()) == first);

  const std::string csv = riskattr::read_text_file(plot.string());
  CHECK(csv.rfind("feature,bshap,ig\n", 0) == 0);
}

TEST_CASE("cli: audit exit codes track --fail-on-violation") {
  const std::string base_cmd =
      "audit --axiom dim --method ig --model bond --param T=30 --baseline \"0,0\" "
      "--explicand \"0.3,100\" --grid r:0.3:0.5:2";
  const RunResult plain = run(base_cmd);
  CHECK(plain.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(plain.out);
  CHECK(doc["reports"][0]["verdict"] == "violated");
  CHECK_FALSE(doc["reports"][0]["witnesses"].empty());

  CHECK(run(base_cmd + " --fail-on-violation").exit_code == 1);

  // bshap passes the same scenario, so the flag leaves the exit code alone
  const std::string bshap_cmd =
      "audit --axiom dim --method bshap --model bond --param T=30 --baseline \"0,0\" "
      "--explicand \"0.3,100\" --grid r:0.3:0.5:2 --fail-on-violation";
  CHECK(run(bshap_cmd).exit_code == 0);

  // a coarse tolerance override swallows the 4.43 breach
  const RunResult coarse = run(base_cmd + " --tol 100 --fail-on-violation");
  CHECK(coarse.exit_code == 0);
  CHECK(nlohmann::json::parse(coarse.out)["reports"][0]["verdict"] == "pass");
}

TEST_CASE("cli: put DIM audit over the crisis scenario vectors") {
  // percent-scale rates in the vectors are auto-normalized; the analytic
  // put preserves DIM on this grid (the violated variant lives on the
  // trained surrogate, exercised in the acceptance suite)
  const RunResult res = run(
      "audit --axiom dim,rdme --method ig,bshap --model bsm-put "
      "--baseline \"1250,4.2,0.3,1240,0.25\" --explicand \"1300,4.0,0.3,1300,0.4\" "
      "--grid S:1260:1320:13");
  CHECK(res.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(res.out);
  REQUIRE(doc["reports"].size() == 4);
  for (const auto& rep : doc["reports"]) CHECK(rep["verdict"] == "pass");
}

TEST_CASE("cli: fmd audit of call dominance over put") {
  const RunResult res = run(
      "audit --axiom fmd --method bshap --model bsm-call --model2 bsm-put "
      "--baseline \"1250,4.2,0.3,1240,0.25\" --explicand \"1300,4.0,0.3,1300,0.4\" "
      "--grid S:1260:1320:5");
  CHECK(res.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(res.out);
  CHECK(doc["reports"][0]["axiom"] == "fmd");
  CHECK(doc["reports"][0]["verdict"] == "pass");
}

TEST_CASE("cli: gd audit reports not-applicable for a live feature") {
  const RunResult res = run(
      "audit --axiom gd --method bshap --model bsm-call --dummy sigma "
      "--baseline \"100,0.05,1,100,0.2\" --explicand \"110,0.04,0.5,95,0.3\" "
      "--grid S:95:115:3");
  CHECK(res.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(res.out);
  CHECK(doc["reports"][0]["verdict"] == "not-applicable");
  CHECK_FALSE(doc["reports"][0]["witnesses"].empty());
}

TEST_CASE("cli: cg audit against a fitted box domain") {
  const fs::path dir = scratch_dir();
  const fs::path points = dir / "training_points.csv";
  riskattr::write_text_file(points.string(),
                            "S,r,tau,K,sigma\n"
                            "80,0.01,0.2,80,0.1\n"
                            "100,0.03,0.6,100,0.25\n"
                            "120,0.06,1.2,120,0.45\n");
  const fs::path dom = dir / "box.json";
  CHECK(run("domain --input " + points.string() + " --mode axis-box --out " + dom.string())
            .exit_code == 0);

  const std::string audit_cmd =
      "audit --axiom cg --method bshap --model bsm-call "
      "--baseline \"90,0.02,0.4,90,0.15\" --explicand \"110,0.05,1.0,110,0.4\" "
      "--grid S:100:110:2 --domain " + dom.string();
  const RunResult res = run(audit_cmd);
  CHECK(res.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(res.out);
  CHECK(doc["reports"][0]["axiom"] == "cg");
  CHECK(doc["reports"][0]["verdict"] == "pass");
}

TEST_CASE("cli: vix on a flat chain") {
  const fs::path chain = scratch_dir() / "chain.csv";
  {
    std::ofstream out(chain);
    out << "strike,quote,side\n";
    const double F = 100.0, r = 0.02, tau = 30.0 / 365.0, sigma = 0.2;
    const double S = F * std::exp(-r * tau);
    for (double k = 50; k <= 200.0001; k += 0.5) {
      const bool is_put = k <= F;
      const double q = riskattr::bsm_price(S, k, r, tau, sigma,
                                           is_put ? riskattr::OptionKind::put
                                                  : riskattr::OptionKind::call);
      out << k << ',' << q << ',' << (is_put ? "put" : "call") << '\n';
    }
  }
  const RunResult res = run("vix --chain " + chain.string() + " --forward 100 --rate 0.02");
  CHECK(res.exit_code == 0);
  const double vix = std::stod(res.out);
  CHECK(std::fabs(vix - 0.2) < 0.01);
}

TEST_CASE("cli: domain generation and fitting") {
  const fs::path out = scratch_dir() / "domain.json";
  const RunResult res = run(
      "domain --generate leverage --n 400 --s-range 700,1350 --sigma-range 0.15,0.9 "
      "--corr -0.9 --seed 7 --mode hull2d --hull-features S,sigma --out " +
      out.string());
  CHECK(res.exit_code == 0);
  const riskattr::TrainingDomain dom =
      riskattr::domain_from_json(riskattr::read_text_file(out.string()));
  CHECK(dom.mode() == riskattr::DomainMode::hull2d);
  CHECK(dom.hull().size() >= 3);
}

TEST_CASE("cli: dataset-driven baseline defaults to the record means") {
  const fs::path csv = scratch_dir() / "baseline_records.csv";
  riskattr::write_text_file(csv.string(),
                            "# rates=percent\n"
                            "S,r,tau,K,sigma,price,kind\n"
                            "100,4.0,0.5,100,0.2,8.1,call\n"
                            "120,6.0,0.7,110,0.3,16.2,call\n");
  const RunResult res = run("attribute --model bsm-call --input " + csv.string() +
                            " --explicand \"105,0.05,0.6,105,0.25\" --methods bshap");
  CHECK(res.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(res.out);
  // baseline = means (110, 0.05, 0.6, 105, 0.25): only S differs from the
  // explicand, so the whole price move lands on S
  const auto a = doc["results"][0]["attributions"].get<std::vector<double>>();
  const double expected = riskattr::bsm_price(105, 105, 0.05, 0.6, 0.25,
                                              riskattr::OptionKind::call) -
                          riskattr::bsm_price(110, 105, 0.05, 0.6, 0.25,
                                              riskattr::OptionKind::call);
  CHECK(a[0] == doctest::Approx(expected).epsilon(1e-9));
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(0.0));
}

TEST_CASE("cli: train on a small synthetic csv") {
  const fs::path dir = scratch_dir();
  const fs::path csv = dir / "records.csv";
  const fs::path model_file = dir / "model.json";
  riskattr::write_text_file(
      csv.string(),
      riskattr::option_records_to_csv(
          riskattr::testing::bsm_record_grid(riskattr::OptionKind::call, 80, 3)));

  const RunResult res = run("train --input " + csv.string() + " --out " + model_file.string() +
                            " --hidden 6 --max-iters 30 --seed 5");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("test RMSE:") != std::string::npos);
  const auto model = riskattr::MlpSurrogate::from_json_string(
      riskattr::read_text_file(model_file.string()));
  CHECK(model->n_features() == 5);

  // reuse the trained model through the price command
  const RunResult price = run("price --model surrogate-file --model-file " +
                              model_file.string() + " --point \"100,0.03,0.5,95,0.2\"");
  CHECK(price.exit_code == 0);
}
