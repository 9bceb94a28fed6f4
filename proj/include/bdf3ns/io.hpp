#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bdf3ns/benchmarks.hpp"
#include "bdf3ns/diagnostics.hpp"
#include "bdf3ns/integrators.hpp"

namespace bdf3ns::io {

/// Shortest round-trip text for 17 significant digits ("%.17g").
std::string format_double(double v);

inline constexpr const char* kSeriesHeader = "t,l2_omega,h1_omega,energy,enstrophy,div_error,max_omega,F,G1";

void write_series_header(std::ostream& out);
void write_series_row(std::ostream& out, const SeriesRecord& r);

/// Streams series rows as they are produced.
class CsvSeriesWriter : public RunObserver {
 public:
  explicit CsvSeriesWriter(std::ostream& out);
  void on_series(const SeriesRecord& r) override;

 private:
  std::ostream& out_;
};

/// dt,variable,err_linf_l2,order_linf_l2,err_l2_h1,order_l2_h1
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

/// Binary PGM (P5): rows from y = 0 upward, values mapped linearly from
/// [min, max] to [0, 255]; the bounds go in the comment line.
void write_pgm(const std::filesystem::path& path, const ScalarField& f);

/// 8-byte magic "VORSPEC1", two little-endian uint32 (N, N), then N*N
/// little-endian float64 values row-major.
void write_raw(const std::filesystem::path& path, const ScalarField& f);
ScalarField read_raw(const std::filesystem::path& path, double length = 1.0);

/// Writes omega_<step>.pgm and omega_<step>.raw into a directory.
class SnapshotWriter : public RunObserver {
 public:
  explicit SnapshotWriter(std::filesystem::path directory, std::string prefix = "omega");
  void on_snapshot(const FlowState& s, long step) override;
  const std::vector<std::filesystem::path>& written() const noexcept { return written_; }

 private:
  std::filesystem::path dir_;
  std::string prefix_;
  std::vector<std::filesystem::path> written_;
};

/// Plain key=value lines; '#' starts a comment; blank lines ignored.
/// Throws ConfigError on a malformed line or a repeated key.
std::map<std::string, std::string> parse_config(std::istream& in);
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

}  // namespace bdf3ns::io
