#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "opsplit/cli/commands.hpp"
#include "opsplit/snapshot.hpp"

using namespace opsplit;
using namespace opsplit::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "opsplit_test_commands" / name;
  fs::remove_all(p);
  return p;
}

RunConfig config(const Overrides& flags, const fs::path& out) {
  Overrides all = flags;
  all.emplace_back("out", out.string());
  return parse_config(static_cast<std::istream*>(nullptr), all);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Value of `key=` in a key=value report.
std::string value_of(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

}  // namespace

TEST_CASE("run writes diagnostics, final snapshot and report") {
  const fs::path out = scratch("run");
  std::ostringstream log;
  const RunConfig cfg = config({}, out);
  REQUIRE(run_command(Subcommand::Run, cfg, log) == exit_code::ok);
  CHECK(fs::exists(out / "trajectory.csv"));
  CHECK(fs::exists(out / "report.txt"));
  CHECK(slurp(out / "report.txt") == log.str());
  CHECK(value_of(log.str(), "steps") == "20");

  const RealField final_state = read_real_csv(out / "final.csv", cfg.length);
  const auto traj = evolve(cfg.initial_state(), cfg.scheme_config());
  CHECK(final_state == traj.final_state());
}

TEST_CASE("identical configs give byte-identical files") {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  std::ostringstream log;
  const Overrides flags = {{"scheme", "strang"}, {"symbol", "bo"}, {"snapshots", "true"}, {"T", "0.3"}};
  REQUIRE(run_command(Subcommand::Run, config(flags, a), log) == exit_code::ok);
  REQUIRE(run_command(Subcommand::Run, config(flags, b), log) == exit_code::ok);
  for (const char* f : {"trajectory.csv", "final.csv", "report.txt", "snapshots/step_00006.csv"}) {
    CAPTURE(f);
    REQUIRE(fs::exists(a / f));
    CHECK(slurp(a / f) == slurp(b / f));
  }
}

TEST_CASE("reference scheme runs through the unsplit solver") {
  const fs::path out = scratch("ref");
  std::ostringstream log;
  REQUIRE(run_command(Subcommand::Run, config({{"scheme", "reference"}, {"dt", "0.01"}, {"T", "0.1"}}, out), log) ==
          exit_code::ok);
  CHECK(value_of(log.str(), "scheme") == "reference");
  CHECK(value_of(log.str(), "steps") == "10");
}

TEST_CASE("blow-up is reported with a machine-readable error line") {
  const fs::path out = scratch("blowup");
  std::ostringstream log;
  const RunConfig cfg = config({{"symbol", "zero"}, {"u0", "sine"}, {"T", "4"}, {"dt", "0.5"}}, out);
  CHECK(run_command(Subcommand::Run, cfg, log) == exit_code::runtime_error);
  CHECK(value_of(log.str(), "error") == "BlowupDetected");
  CHECK(log.str().find("step") != std::string::npos);
}

TEST_CASE("dt larger than T is a config error") {
  CHECK_THROWS_AS(config({{"dt", "2"}}, scratch("bad")), ConfigError);
}

TEST_CASE("converge with defaults recovers first order") {
  const fs::path out = scratch("converge");
  std::ostringstream log;
  const int code = run_command(Subcommand::Converge, config({{"sigmas", "0,1"}}, out), log);
  CHECK(code == exit_code::ok);
  const double slope = std::stod(value_of(log.str(), "slope_0"));
  CHECK(std::abs(slope - 1.0) <= 0.2);
  CHECK(fs::exists(out / "converge_godunov_kdv.csv"));
  CHECK(fs::exists(out / "loglog_godunov_kdv_sigma0.dat"));
  CHECK(fs::exists(out / "loglog_godunov_kdv_sigma1.dat"));
  CHECK(fs::exists(out / "plot_godunov_kdv.gp"));
  CHECK(value_of(log.str(), "status") == "pass");

  // Every error in the CSV re-parses to the in-memory value.
  std::istringstream csv(slurp(out / "converge_godunov_kdv.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "dt,sigma,error,admitted");
  while (std::getline(csv, line)) {
    const std::string dt = line.substr(0, line.find(','));
    CHECK(format_double(std::stod(dt)) == dt);
  }
}

TEST_CASE("converge and local-order reject the reference scheme") {
  std::ostringstream log;
  CHECK(run_command(Subcommand::Converge, config({{"scheme", "reference"}}, scratch("cref")), log) ==
        exit_code::config_error);
  CHECK(value_of(log.str(), "error") == "ConfigError");
}

TEST_CASE("local-order on Strang KdV") {
  const fs::path out = scratch("local");
  std::ostringstream log;
  const auto cfg = config({{"scheme", "strang"}, {"sigmas", "0"}, {"dts", "0.1,0.05,0.025,0.0125"}}, out);
  CHECK(run_command(Subcommand::LocalOrder, cfg, log) == exit_code::ok);
  CHECK(std::abs(std::stod(value_of(log.str(), "slope_0")) - 3.0) <= 0.3);
  CHECK(fs::exists(out / "local_order_strang_kdv.csv"));
}

TEST_CASE("verify-symbol") {
  std::ostringstream log;
  CHECK(run_command(Subcommand::VerifySymbol, config({{"symbol", "burgers"}}, scratch("vs")), log) ==
        exit_code::ok);
  CHECK(value_of(log.str(), "dissipativity_ok") == "true");
  CHECK(value_of(log.str(), "symmetry_ok") == "true");
  CHECK(value_of(log.str(), "passed") == "true");
}

TEST_CASE("verify-lemmas writes one report per estimate") {
  const fs::path out = scratch("lemmas");
  std::ostringstream log;
  CHECK(run_command(Subcommand::VerifyLemmas, config({{"trials", "20"}}, out), log) == exit_code::ok);
  for (const char* id : {"commutator", "bilinear_a", "bilinear_b"}) {
    CAPTURE(id);
    const std::string csv = slurp(out / (std::string("inequality_") + id + ".csv"));
    CHECK(csv.rfind("trials,max_ratio,ratio_stability\n20,", 0) == 0);
  }
  CHECK(value_of(log.str(), "zero_cases_ok") == "true");
}

TEST_CASE("subcommand names") {
  CHECK(subcommand_from_string("local-order") == Subcommand::LocalOrder);
  CHECK_THROWS_AS(subcommand_from_string("plot"), ConfigError);
}
