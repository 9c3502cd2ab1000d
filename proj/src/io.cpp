#include "qbaker/io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qbaker/errors.hpp"

namespace qbaker {

namespace {

double finite_number(const Json& v, const std::string& field) {
  if (!v.is_number()) throw ParseError(field + " is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(field + " is not finite");
  return x;
}

std::complex<double> complex_entry(const Json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) throw ParseError(field + " must be a [re, im] pair");
  return {finite_number(v[0], field + "[0]"), finite_number(v[1], field + "[1]")};
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

int parse_int(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  for (std::string_view w : split(line, ' '))
    if (!w.empty()) out.push_back(w);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Json state_to_json(const StateVector& state) {
  Json amps = Json::array();
  for (Eigen::Index j = 0; j < state.dim(); ++j) amps.push_back(complex_json(state[j]));
  return Json{{"qubits", state.qubits()}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("state must be a JSON object");
  if (!j.contains("qubits") || !j["qubits"].is_number_integer()) throw ParseError("qubits must be an integer");
  const auto qubits = j["qubits"].get<std::int64_t>();
  if (qubits < 1 || qubits > kMaxQubits) throw ParseError("qubits out of range: " + std::to_string(qubits));
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) throw ParseError("amplitudes must be an array");
  const Json& amps = j["amplitudes"];
  if (amps.size() != dimension(static_cast<int>(qubits)))
    throw ParseError("amplitudes has " + std::to_string(amps.size()) + " entries, expected 2^" + std::to_string(qubits));
  Amplitudes<double> v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = complex_entry(amps[i], "amplitudes[" + std::to_string(i) + "]");
  return StateVector(static_cast<int>(qubits), std::move(v));
}

StateVector read_state(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": malformed JSON: " + e.what());
  }
  return state_from_json(j);
}

void write_state(const StateVector& state, const std::filesystem::path& path) {
  write_file_atomic(path, state_to_json(state).dump() + "\n");
}

std::string circuit_to_text(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.qubits()) + "\n";
  for (const Gate& g : c.gates()) out += to_string(g) + "\n";
  out += "relabel";
  for (int p : c.relabel()) out += " " + std::to_string(p);
  out += "\n";
  return out;
}

Circuit circuit_from_text(std::string_view text) {
  int qubits = 0;
  std::vector<Gate> gates;
  Permutation relabel;
  bool have_relabel = false;
  int line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto w = words(line);
    const std::string where = "line " + std::to_string(line_no);
    if (have_relabel) throw ParseError(where + ": content after the relabel line");
    if (qubits == 0) {
      if (w.size() != 2 || w[0] != "qubits") throw ParseError(where + ": expected header 'qubits L'");
      qubits = parse_int(w[1], line_no);
      if (qubits < 1 || qubits > kMaxQubits) throw ParseError(where + ": qubits out of range");
      continue;
    }
    try {
      if (w[0] == "A" && w.size() == 2) {
        gates.push_back(gate_a(parse_int(w[1], line_no)));
      } else if ((w[0] == "B" || w[0] == "Bdg") && w.size() == 3) {
        gates.push_back(gate_b(parse_int(w[1], line_no), parse_int(w[2], line_no), w[0] == "Bdg"));
      } else if ((w[0] == "B" || w[0] == "Bdg") && w.size() == 4) {
        gates.push_back(
            gate_b_order(parse_int(w[1], line_no), parse_int(w[2], line_no), parse_int(w[3], line_no), w[0] == "Bdg"));
      } else if (w[0] == "SWAP" && w.size() == 3) {
        gates.push_back(gate_swap(parse_int(w[1], line_no), parse_int(w[2], line_no)));
      } else if (w[0] == "relabel" && static_cast<int>(w.size()) == qubits + 1) {
        for (std::size_t k = 1; k < w.size(); ++k) relabel.push_back(parse_int(w[k], line_no));
        have_relabel = true;
      } else {
        throw ParseError(where + ": unrecognized line '" + std::string(line) + "'");
      }
    } catch (const DomainError& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (!gates.empty() && max_label(gates.back()) >= qubits)
      throw ParseError(where + ": qubit label out of range for " + std::to_string(qubits) + " qubits");
  }
  if (qubits == 0) throw ParseError("missing 'qubits L' header");
  if (!have_relabel) relabel = identity_permutation(qubits);
  if (!is_permutation(relabel, qubits)) throw ParseError("relabel is not a permutation of 0.." + std::to_string(qubits - 1));
  return Circuit(qubits, std::move(gates), std::move(relabel));
}

Json matrix_to_json(const UnitaryMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  const auto qubits = static_cast<int>(std::lround(std::log2(static_cast<double>(m.rows()))));
  return Json{{"qubits", qubits}, {"dim", m.rows()}, {"entries", std::move(rows)}};
}

UnitaryMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("dim must be an integer");
  const auto dim = j["dim"].get<Eigen::Index>();
  if (dim < 1) throw ParseError("dim must be positive");
  if (!j.contains("entries") || !j["entries"].is_array() || static_cast<Eigen::Index>(j["entries"].size()) != dim)
    throw ParseError("entries must have dim rows");
  UnitaryMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const Json& row = j["entries"][static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      throw ParseError("entries[" + std::to_string(r) + "] must have dim columns");
    for (Eigen::Index c = 0; c < dim; ++c)
      m(r, c) = complex_entry(row[static_cast<std::size_t>(c)],
                              "entries[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string echo_csv(const std::vector<Trajectory>& ensemble) {
  std::ostringstream out;
  out << "step,member,fidelity,pos_entropy,mom_entropy\n";
  for (std::size_t m = 0; m < ensemble.size(); ++m)
    for (const TrajectoryRecord& r : ensemble[m])
      out << r.step << ',' << m << ',' << format_double(r.fidelity) << ',' << format_double(r.position_entropy) << ','
          << format_double(r.momentum_entropy) << '\n';
  return out.str();
}

std::string form_factor_csv(const std::vector<double>& k, int n_min) {
  std::string out = "n,K\n";
  for (std::size_t i = 0; i < k.size(); ++i)
    out += std::to_string(static_cast<int>(i) + n_min) + "," + format_double(k[i]) + "\n";
  return out;
}

CsvTable parse_csv_strict(std::string_view text) {
  CsvTable table;
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front().empty()) throw ParseError("csv: missing header row");
  for (std::string_view h : split(lines.front(), ',')) {
    if (h.empty()) throw ParseError("csv: empty header cell");
    table.header.emplace_back(h);
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    if (cells.size() != table.header.size())
      throw ParseError("csv row " + std::to_string(i) + ": " + std::to_string(cells.size()) + " columns, expected " +
                       std::to_string(table.header.size()));
    std::vector<double> row;
    for (std::string_view cell : cells) {
      double x = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), x);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(x))
        throw ParseError("csv row " + std::to_string(i) + ": bad number '" + std::string(cell) + "'");
      row.push_back(x);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Json manifest_to_json(const RunManifest& m) {
  return Json{{"command", m.command},     {"parameters", m.parameters}, {"version", m.version},
              {"seed", m.seed},           {"timestamp", m.timestamp}};
}

RunManifest manifest_from_json(const Json& j) {
  RunManifest m;
  try {
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters");
    m.version = j.at("version").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.timestamp = j.value("timestamp", "");
  } catch (const Json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  if (!m.parameters.is_object()) throw ParseError("manifest: parameters must be an object");
  return m;
}

std::filesystem::path manifest_path(const std::filesystem::path& output) {
  return std::filesystem::path(output.string() + ".manifest.json");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qbaker
