#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "bdf3ns/checks.hpp"
#include "bdf3ns/errors.hpp"
#include "bdf3ns/io.hpp"
#include "helpers.hpp"

using namespace bdf3ns;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "bdf3ns_test_io";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("format_double round-trips with 17 digits") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 200; ++i) {
    const double v = u(rng) * std::pow(10.0, (i % 20) - 10);
    CHECK(std::stod(io::format_double(v)) == v);
  }
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(std::nan("")) == "nan");
}

TEST_CASE("series CSV") {
  std::ostringstream out;
  io::CsvSeriesWriter w(out);
  SeriesRecord r;
  r.t = 0.5;
  r.F = 2.0;
  w.on_series(r);
  CHECK(out.str() == "t,l2_omega,h1_omega,energy,enstrophy,div_error,max_omega,F,G1\n0.5,0,0,0,0,0,0,2,0\n");
}

TEST_CASE("convergence CSV") {
  std::ostringstream out;
  ConvergenceRow a{0.02, "omega", 1e-6, std::nan(""), 2e-6, std::nan("")};
  ConvergenceRow b{0.01, "omega", 1.25e-7, 3.0, 2.5e-7, 3.0};
  io::write_convergence_csv(out, {a, b});
  CHECK(out.str() ==
        "dt,variable,err_linf_l2,order_linf_l2,err_l2_h1,order_l2_h1\n"
        "0.02,omega,9.9999999999999995e-07,nan,1.9999999999999999e-06,nan\n"
        "0.01,omega,1.2499999999999999e-07,3,2.4999999999999999e-07,3\n");
}

TEST_CASE("PGM layout: header, bounds comment, rows from y = 0") {
  const Grid g(4);
  std::vector<double> v(16, 0.0);
  v[0] = -1.0;  // (i=0, j=0)
  v[15] = 3.0;  // (i=3, j=3)
  const auto f = ScalarField::from_physical(g, v);
  const auto path = scratch("f.pgm");
  io::write_pgm(path, f);
  const std::string s = slurp(path);
  const std::string header = "P5\n# min=-1 max=3\n4 4\n255\n";
  REQUIRE(s.size() == header.size() + 16);
  CHECK(s.substr(0, header.size()) == header);
  const auto* px = reinterpret_cast<const unsigned char*>(s.data() + header.size());
  CHECK(px[0] == 0);
  CHECK(px[15] == 255);
  CHECK(px[1] == 64);  // 0 maps to 1/4 of the range
}

TEST_CASE("raw snapshots round-trip bit-exactly") {
  std::mt19937_64 rng(72);
  const Grid g(12);
  const auto f = random_mean_free_field(g, rng, 0.0);
  const auto path = scratch("f.raw");
  io::write_raw(path, f);
  const std::string s = slurp(path);
  REQUIRE(s.size() == 16 + 8 * 144);
  CHECK(s.substr(0, 8) == "VORSPEC1");
  CHECK(static_cast<unsigned char>(s[8]) == 12);
  CHECK(static_cast<unsigned char>(s[12]) == 12);
  const auto back = io::read_raw(path);
  CHECK(testing::max_diff(back, f) == 0.0);

  std::ofstream(scratch("bad.raw"), std::ios::binary) << "NOTRAW00";
  CHECK_THROWS(io::read_raw(scratch("bad.raw")));
}

TEST_CASE("snapshot writer names files by step") {
  const auto dir = scratch("snaps");
  fs::remove_all(dir);
  io::SnapshotWriter w(dir);
  const Grid g(4);
  w.on_snapshot(FlowState{ScalarField(g), ScalarField(g), VectorField(g), 0.0}, 7);
  CHECK(fs::exists(dir / "omega_000007.pgm"));
  CHECK(fs::exists(dir / "omega_000007.raw"));
  CHECK(w.written().size() == 2);
}

TEST_CASE("config parser") {
  std::istringstream in("# comment\n n = 32 \n\nnu=0.001 # trailing\nscheme=bdf2\n");
  const auto cfg = io::parse_config(in);
  CHECK(cfg.size() == 3);
  CHECK(cfg.at("n") == "32");
  CHECK(cfg.at("nu") == "0.001");
  CHECK(cfg.at("scheme") == "bdf2");

  std::istringstream bad("n 32\n");
  CHECK_THROWS_AS(io::parse_config(bad), ConfigError);
  std::istringstream dup("n=1\nn=2\n");
  CHECK_THROWS_AS(io::parse_config(dup), ConfigError);
  std::istringstream empty_key("=2\n");
  CHECK_THROWS_AS(io::parse_config(empty_key), ConfigError);
  CHECK_THROWS_AS(io::read_config_file("/nonexistent/cfg"), ConfigError);
}
