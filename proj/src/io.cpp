#include "bdf3ns/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bdf3ns/errors.hpp"
#include "bdf3ns/spectral.hpp"

namespace bdf3ns::io {
namespace {

constexpr std::array<char, 8> kRawMagic{'V', 'O', 'R', 'S', 'P', 'E', 'C', '1'};

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    std::array<unsigned char, sizeof(T)> b;
    std::memcpy(b.data(), &v, sizeof(T));
    std::reverse(b.begin(), b.end());
    std::memcpy(&v, b.data(), sizeof(T));
    return v;
  }
}

template <class T>
void put(std::ostream& out, T v) {
  v = to_little(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw std::runtime_error("truncated raw snapshot");
  return to_little(v);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void write_series_header(std::ostream& out) { out << kSeriesHeader << '\n'; }

void write_series_row(std::ostream& out, const SeriesRecord& r) {
  out << format_double(r.t) << ',' << format_double(r.l2_omega) << ',' << format_double(r.h1_omega) << ','
      << format_double(r.energy) << ',' << format_double(r.enstrophy) << ',' << format_double(r.div_error) << ','
      << format_double(r.max_omega) << ',' << format_double(r.F) << ',' << format_double(r.G1) << '\n';
}

CsvSeriesWriter::CsvSeriesWriter(std::ostream& out) : out_(out) { write_series_header(out_); }

void CsvSeriesWriter::on_series(const SeriesRecord& r) { write_series_row(out_, r); }

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "dt,variable,err_linf_l2,order_linf_l2,err_l2_h1,order_l2_h1\n";
  for (const auto& r : rows) {
    out << format_double(r.dt) << ',' << r.variable << ',' << format_double(r.err_linf_l2) << ','
        << format_double(r.order_linf_l2) << ',' << format_double(r.err_l2_h1) << ','
        << format_double(r.order_l2_h1) << '\n';
  }
}

void write_pgm(const std::filesystem::path& path, const ScalarField& f) {
  const ScalarField p = to_physical(f);
  const auto values = p.physical();
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const int n = f.grid().n();

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "P5\n# min=" << format_double(lo) << " max=" << format_double(hi) << '\n' << n << ' ' << n << "\n255\n";
  std::vector<unsigned char> bytes(values.size());
  const double span = hi - lo;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double t = span > 0.0 ? (values[i] - lo) / span : 0.0;
    bytes[i] = static_cast<unsigned char>(std::lround(std::clamp(t, 0.0, 1.0) * 255.0));
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_raw(const std::filesystem::path& path, const ScalarField& f) {
  const ScalarField p = to_physical(f);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out.write(kRawMagic.data(), kRawMagic.size());
  const auto n = static_cast<std::uint32_t>(f.grid().n());
  put(out, n);
  put(out, n);
  for (double v : p.physical()) put(out, v);
}

ScalarField read_raw(const std::filesystem::path& path, double length) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kRawMagic) throw std::runtime_error(path.string() + " is not a VORSPEC1 snapshot");
  const auto nx = get<std::uint32_t>(in);
  const auto ny = get<std::uint32_t>(in);
  if (nx != ny || nx < 2) throw std::runtime_error("raw snapshot must be square");
  const Grid grid(static_cast<int>(nx), length);
  std::vector<double> values(grid.size());
  for (auto& v : values) v = get<double>(in);
  return ScalarField::from_physical(grid, std::move(values));
}

SnapshotWriter::SnapshotWriter(std::filesystem::path directory, std::string prefix)
    : dir_(std::move(directory)), prefix_(std::move(prefix)) {
  std::filesystem::create_directories(dir_);
}

void SnapshotWriter::on_snapshot(const FlowState& s, long step) {
  std::ostringstream name;
  name << prefix_ << '_' << std::setw(6) << std::setfill('0') << step;
  const auto pgm = dir_ / (name.str() + ".pgm");
  const auto raw = dir_ / (name.str() + ".raw");
  write_pgm(pgm, s.omega);
  write_raw(raw, s.omega);
  written_.push_back(pgm);
  written_.push_back(raw);
}

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    if (!out.emplace(key, value).second) throw ConfigError("config key '" + key + "' repeated");
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  return parse_config(in);
}

}  // namespace bdf3ns::io
