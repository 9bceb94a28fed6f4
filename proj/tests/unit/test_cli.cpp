#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bdf3ns/cli.hpp"

using namespace bdf3ns;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bdf3ns");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "bdf3ns_test_cli";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"no-such-command"}).code == kExitUsage);
  CHECK(invoke({"tg-longrun", "--bogus"}).code == kExitUsage);
  CHECK(invoke({"tg-longrun", "--n", "abc"}).code == kExitUsage);
  CHECK(invoke({"tg-longrun", "--scheme", "rk4", "--t-final", "0.02"}).code == kExitUsage);
  CHECK(invoke({"shear-layer", "--case", "medium"}).code == kExitUsage);
  const auto r = invoke({"tg-longrun", "--dt", "-1"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("dt") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const auto r = invoke({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("tg-convergence") != std::string::npos);
}

TEST_CASE("telescope prints ten coefficients and a small residual") {
  const auto r = invoke({"telescope"});
  CHECK(r.code == kExitOk);
  for (int i = 1; i <= 10; ++i) CHECK(r.out.find("alpha" + std::to_string(i) + " = ") != std::string::npos);
  const auto pos = r.out.find("identity_residual = ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(r.out.substr(pos + 20)) <= 1e-10);
}

TEST_CASE("check runs the invariant suite") {
  const auto r = invoke({"check"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(count_lines(r.out) >= 10);
}

TEST_CASE("tg-longrun writes a deterministic series") {
  const std::vector<std::string> args{"tg-longrun", "--n", "16", "--t-final", "0.1", "--dt", "0.01"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("t,l2_omega,h1_omega,energy,enstrophy,div_error,max_omega,F,G1\n", 0) == 0);
  CHECK(count_lines(a.out) == 12);  // header + n = 0..10
}

TEST_CASE("config file values apply unless a flag overrides them") {
  const auto cfg = scratch() / "run.cfg";
  std::ofstream(cfg) << "# small run\nn = 16\nt_final = 0.05\ndt = 0.01\nseries-every = 5\n";
  const auto from_file = invoke({"tg-longrun", "--config", cfg.string()});
  CHECK(from_file.code == kExitOk);
  CHECK(count_lines(from_file.out) == 3);  // header, n = 0, n = 5
  const auto overridden = invoke({"tg-longrun", "--config", cfg.string(), "--series-every", "1"});
  CHECK(overridden.code == kExitOk);
  CHECK(count_lines(overridden.out) == 7);

  const auto bad = scratch() / "bad.cfg";
  std::ofstream(bad) << "resolution = 16\n";
  CHECK(invoke({"tg-longrun", "--config", bad.string()}).code == kExitUsage);
  CHECK(invoke({"tg-longrun", "--config", (scratch() / "missing.cfg").string()}).code == kExitUsage);
}

TEST_CASE("csv and snapshot outputs") {
  const auto dir = scratch() / "out";
  fs::remove_all(dir);
  const auto csv = scratch() / "series.csv";
  const auto r = invoke({"shear-layer", "--n", "32", "--dt", "0.002", "--t-final", "0.02", "--nu", "1e-3", "--csv",
                         csv.string(), "--out", dir.string(), "--scheme", "bdf2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(fs::exists(csv));
  CHECK(fs::exists(dir / "omega_000010.pgm"));
  CHECK(fs::exists(dir / "omega_000010.raw"));
}

TEST_CASE("tg-convergence emits a convergence table") {
  const auto r = invoke({"tg-convergence", "--n", "16", "--nu", "0.01", "--t-final", "0.2", "--dt0", "0.02",
                         "--levels", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("dt,variable,err_linf_l2,order_linf_l2,err_l2_h1,order_l2_h1\n", 0) == 0);
  CHECK(count_lines(r.out) == 10);
}

TEST_CASE("blow-up exits 1") {
  const auto r = invoke({"shear-layer", "--case", "thin", "--n", "32", "--dt", "0.5", "--t-final", "200", "--nu",
                         "1e-6", "--delta", "0.5", "--scheme", "euler", "--series-every", "0"});
  CHECK(r.code == kExitFailure);
  CHECK(r.err.find("blow-up") != std::string::npos);
}

#ifdef BDF3NS_CLI_PATH
TEST_CASE("installed driver binary runs") {
  const std::string cmd = std::string(BDF3NS_CLI_PATH) + " telescope > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string bad = std::string(BDF3NS_CLI_PATH) + " frobnicate > /dev/null 2>&1";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
#endif
