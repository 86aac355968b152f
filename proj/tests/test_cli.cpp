#include "cli_runner.hpp"
#include "support.hpp"

#include <cstdlib>

using fr_test::run;
using namespace fusionring::cli;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv("FUSIONRING_PRECISION", value, 1); }
  ~EnvGuard() { ::unsetenv("FUSIONRING_PRECISION"); }
};

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(run({"check", "catalog:fibonacci"}).code == kExitPass);
  CHECK(run({"check", fr_test::data_path("fibonacci.fring"), "--criterion", "all"}).code ==
        kExitPass);
  const auto broken = run({"check", fr_test::data_path("broken.fring")});
  CHECK(broken.code == kExitFail);
  CHECK(broken.out.find("FAIL") != std::string::npos);
  CHECK(run({"check", fr_test::data_path("lpw_counterexample.fring"), "--criterion", "lpw"}).code ==
        kExitFail);
  const auto syntax = run({"check", fr_test::data_path("bad_syntax.fring")});
  CHECK(syntax.code == kExitUsage);
  CHECK(syntax.err.find("line 4") != std::string::npos);
  CHECK(run({"check", fr_test::data_path("missing.fring")}).code == kExitUsage);
  CHECK(run({"check", "catalog:nonexistent"}).code == kExitUsage);
}

TEST_CASE("option validation") {
  CHECK(run({"check", "catalog:fibonacci", "--n", "9"}).code == kExitUsage);
  CHECK(run({"check", "catalog:fibonacci", "--precision", "8"}).code == kExitUsage);
  CHECK(run({"check", "catalog:fibonacci", "--tol", "-3"}).code == kExitUsage);
  CHECK(run({"check", "catalog:fibonacci", "--s", "1/0"}).code == kExitUsage);
  CHECK(run({"check", "catalog:fibonacci", "--criterion", "bogus"}).code == kExitUsage);
  CHECK(run({"check", "catalog:fibonacci", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("JSON reports") {
  const auto r = run({"check", "catalog:ising", "--criterion", "schur", "--format", "json"});
  REQUIRE(r.code == kExitPass);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["reports"].size() == 1);
  const auto& rep = doc["reports"][0];
  CHECK(rep["ring"] == "ising");
  CHECK(rep["verdict"] == "pass");
  CHECK(rep["precision_bits"] == 256);
}

TEST_CASE("spectra output") {
  const auto r = run({"spectra", "catalog:rep_s3", "--format", "json"});
  REQUIRE(r.code == kExitPass);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rank"] == 3);
  std::vector<std::string> codegrees;
  for (const auto& c : doc["codegrees"]) {
    codegrees.push_back(c.get<std::string>().substr(0, 3));
  }
  CHECK(codegrees == std::vector<std::string>{"6.0", "3.0", "2.0"});
  const auto g = run({"spectra", "catalog:group_s3", "--format", "json"});
  REQUIRE(g.code == kExitPass);
  CHECK(nlohmann::json::parse(g.out).contains("irreps"));
}

TEST_CASE("precision from the environment, overridden by the flag") {
  EnvGuard env("320");
  const auto a = nlohmann::json::parse(
      run({"check", "catalog:fibonacci", "--criterion", "schur", "--format", "json"}).out);
  CHECK(a["reports"][0]["precision_bits"] == 320);
  const auto b = nlohmann::json::parse(run({"check", "catalog:fibonacci", "--criterion", "schur",
                                            "--precision", "384", "--format", "json"})
                                           .out);
  CHECK(b["reports"][0]["precision_bits"] == 384);
}

TEST_CASE("bad environment precision is a usage error") {
  EnvGuard env("lots");
  CHECK(run({"check", "catalog:fibonacci"}).code == kExitUsage);
}

TEST_CASE("determinism") {
  const std::vector<std::string> args = {"check", "catalog:fib_x_fib", "--criterion", "all",
                                         "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
}

TEST_CASE("catalog and oracle commands") {
  const auto list = run({"catalog", "list"});
  CHECK(list.code == kExitPass);
  CHECK(list.out.find("fibonacci") != std::string::npos);
  const auto show = run({"catalog", "show", "ising"});
  CHECK(show.code == kExitPass);
  CHECK(fusionring::parse_ring(show.out).rank() == 3);
  CHECK(run({"catalog", "show", "nope"}).code == kExitUsage);
  CHECK(run({"oracle", "s3"}).code == kExitPass);
  CHECK(run({"oracle", "cyclic_4", "--n", "3"}).code == kExitPass);
  CHECK(run({"oracle", "a5"}).code == kExitUsage);
}

TEST_CASE("noncommutative rings") {
  const auto r = run({"check", "catalog:group_s3"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("lpw-general") != std::string::npos);
  CHECK(run({"check", "catalog:group_s3", "--criterion", "isaacs"}).code == kExitUsage);
}
