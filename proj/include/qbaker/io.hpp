#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qbaker/circuit.hpp"
#include "qbaker/dense.hpp"
#include "qbaker/dynamics.hpp"
#include "qbaker/state.hpp"

namespace qbaker {

inline constexpr std::string_view kVersion = "0.1.0";

using Json = nlohmann::json;

// State files: {"qubits": L, "amplitudes": [[re, im], ...]}, index j ascending.
Json state_to_json(const StateVector& state);
StateVector state_from_json(const Json& j);
StateVector read_state(const std::filesystem::path& path);
void write_state(const StateVector& state, const std::filesystem::path& path);

// Circuit text: header `qubits L`, one gate per line (`A m`, `B m n`,
// `Bdg m n`, `SWAP m n`), `#` comments, trailing `relabel p0 .. p(L-1)`.
// A B gate whose phase order differs from n - m (after swap elision) is
// written `B m n order`.
std::string circuit_to_text(const Circuit& c);
Circuit circuit_from_text(std::string_view text);

/// {"qubits": L, "dim": D, "entries": [[[re, im], ...], ...]} row-major.
Json matrix_to_json(const UnitaryMatrix& m);
UnitaryMatrix matrix_from_json(const Json& j);

/// Shortest decimal string that round-trips; never locale dependent.
std::string format_double(double x);

std::string echo_csv(const std::vector<Trajectory>& ensemble);
std::string form_factor_csv(const std::vector<double>& k, int n_min = 1);

/// Strictly parsed CSV: header present, every row has the header's column
/// count, every cell a finite number written with '.' decimals.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
CsvTable parse_csv_strict(std::string_view text);

/// Everything needed to regenerate an output file.
struct RunManifest {
  std::string command;
  Json parameters = Json::object();
  std::string version{kVersion};
  std::uint64_t seed = 0;
  std::string timestamp;
};

Json manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);
std::filesystem::path manifest_path(const std::filesystem::path& output);
std::string utc_timestamp();

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace qbaker
