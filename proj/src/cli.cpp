#include "qbaker/cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qbaker/baker.hpp"
#include "qbaker/dense.hpp"
#include "qbaker/dynamics.hpp"
#include "qbaker/io.hpp"
#include "qbaker/qft.hpp"
#include "qbaker/quantization.hpp"

namespace qbaker {

namespace {

constexpr double kQftThreshold = 1e-10;

struct Options {
  int qubits = 0;
  std::string form;
  std::string out;
  bool allow_large = false;
  std::string state_path;
  std::optional<std::int64_t> basis;
  int steps = 0;
  double delta = 0.0;
  int ensemble = 1;
  std::uint64_t seed = 0;
  int nmax = 0;
  double q = 0.0;
  double p = 0.0;
  std::string manifest;
};

/// Writes `data` to --out (plus its manifest) or to stdout.
void emit(const Options& o, const std::string& command, const Json& params, std::uint64_t seed,
          const std::string& data, std::ostream& out) {
  if (o.out.empty()) {
    out << data;
    return;
  }
  RunManifest m;
  m.command = command;
  m.parameters = params;
  m.seed = seed;
  m.timestamp = utc_timestamp();
  write_file_atomic(o.out, data);
  write_file_atomic(manifest_path(o.out), manifest_to_json(m).dump(2) + "\n");
}

int run_qft_check(const Options& o, std::ostream& out) {
  const UnitaryMatrix circuit = circuit_to_matrix(qft_circuit(o.qubits));
  const UnitaryMatrix oracle = dft_matrix(o.qubits);
  const double residual = frobenius_distance(circuit, oracle);
  const bool pass = residual <= kQftThreshold;
  out << Json{{"check", "qft"},
              {"qubits", o.qubits},
              {"phase_sign", kDftPhaseSign},
              {"residual", residual},
              {"unitarity_residual", unitarity_residual(circuit)},
              {"threshold", kQftThreshold},
              {"pass", pass}}
             .dump()
      << "\n";
  return pass ? kExitOk : kExitDomain;
}

int run_weyl_check(const Options& o, std::ostream& out) {
  const PhaseSpaceOperators ops = build_operators(o.qubits);
  const WeylReport report = check_weyl(ops);
  // V should be the cyclic shift |q_j> -> |q_{j+1 mod D}>.
  UnitaryMatrix shift = UnitaryMatrix::Zero(ops.dim, ops.dim);
  for (Eigen::Index j = 0; j < ops.dim; ++j) shift((j + 1) % ops.dim, j) = 1.0;
  const double shift_residual = (ops.v_op - shift).cwiseAbs().maxCoeff();
  const bool pass = report.pass() && shift_residual <= 1e-10;
  out << Json{{"check", "weyl"},
              {"qubits", o.qubits},
              {"commutation_residual", report.commutation_residual},
              {"periodicity_residual", report.periodicity_residual},
              {"shift_residual", shift_residual},
              {"threshold", report.threshold},
              {"pass", pass}}
             .dump()
      << "\n";
  return pass ? kExitOk : kExitDomain;
}

int run_baker(const Options& o, std::ostream& out) {
  Json params{{"qubits", o.qubits}, {"form", o.form}};
  std::string data;
  if (o.form == "circuit") {
    data = circuit_to_text(baker_circuit(o.qubits));
  } else {
    params["allow-large"] = o.allow_large;
    const int limit = o.allow_large ? kMaxDenseQubitsOverride : kMaxDenseQubits;
    data = matrix_to_json(baker_matrix(o.qubits, limit)).dump() + "\n";
  }
  emit(o, "baker", params, 0, data, out);
  return kExitOk;
}

int run_iterate(const Options& o, std::ostream& out) {
  Json params{{"qubits", o.qubits}, {"steps", o.steps}};
  StateVector initial(o.qubits);
  if (o.basis) {
    params["basis"] = *o.basis;
    initial = basis_state(o.qubits, *o.basis);
  } else {
    params["state"] = o.state_path;
    initial = read_state(o.state_path);
    if (initial.qubits() != o.qubits)
      throw DomainError("state file has " + std::to_string(initial.qubits()) + " qubits, --qubits is " +
                        std::to_string(o.qubits));
    if (!initial.is_normalized())
      throw DomainError("state file is not normalized: squared norm " + format_double(initial.squared_norm()));
  }
  const StateVector final_state = iterate(std::move(initial), o.steps);
  emit(o, "iterate", params, 0, state_to_json(final_state).dump() + "\n", out);
  return kExitOk;
}

int run_echo(const Options& o, std::ostream& out) {
  EchoConfig cfg;
  cfg.qubits = o.qubits;
  cfg.steps = o.steps;
  cfg.delta = o.delta;
  cfg.ensemble = o.ensemble;
  cfg.seed = o.seed;
  const Json params{{"qubits", o.qubits}, {"steps", o.steps},   {"delta", o.delta},
                    {"ensemble", o.ensemble}, {"seed", o.seed}};
  emit(o, "echo", params, o.seed, echo_csv(loschmidt_echo(cfg)), out);
  return kExitOk;
}

int run_formfactor(const Options& o, std::ostream& out) {
  const Json params{{"qubits", o.qubits}, {"nmax", o.nmax}};
  emit(o, "formfactor", params, 0, form_factor_csv(form_factor(o.qubits, o.nmax)), out);
  return kExitOk;
}

int run_classical(const Options& o, std::ostream& out) {
  if (o.steps < 0) throw DomainError("steps must be >= 0");
  ClassicalPoint pt{o.q, o.p};
  for (int n = 0; n < o.steps; ++n) {
    pt = classical_step(pt);
    out << format_double(pt.q) << ' ' << format_double(pt.p) << '\n';
  }
  return kExitOk;
}

std::vector<std::string> replay_args(const RunManifest& m, const std::string& out_path) {
  std::vector<std::string> args{m.command};
  for (const auto& [key, value] : m.parameters.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
      continue;
    }
    args.push_back("--" + key);
    if (value.is_string())
      args.push_back(value.get<std::string>());
    else if (value.is_number_float())
      args.push_back(format_double(value.get<double>()));
    else
      args.push_back(value.dump());
  }
  if (!out_path.empty()) {
    args.push_back("--out");
    args.push_back(out_path);
  }
  return args;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum baker's map simulator", "qbaker"};
  app.require_subcommand(1);
  Options o;

  auto add_qubits = [&o](CLI::App* sub, int max) {
    sub->add_option("--qubits", o.qubits, "Number of qubits L")->required()->check(CLI::Range(1, max));
  };
  auto add_out = [&o](CLI::App* sub) { sub->add_option("--out", o.out, "Output file (stdout if omitted)"); };

  auto* qft_check = app.add_subcommand("qft-check", "Compare the QFT gate network with the DFT matrix");
  add_qubits(qft_check, kMaxDenseQubits);

  auto* weyl_check = app.add_subcommand("weyl-check", "Check the Weyl relations of the displacement operators");
  add_qubits(weyl_check, kMaxDenseQubits);

  auto* baker = app.add_subcommand("baker", "Emit the quantum baker's map as a circuit or a dense matrix");
  add_qubits(baker, kMaxQubits);
  baker->add_option("--form", o.form, "matrix or circuit")->required()->check(CLI::IsMember({"matrix", "circuit"}));
  baker->add_flag("--allow-large", o.allow_large, "Allow matrix dumps up to 12 qubits");
  add_out(baker);

  auto* iterate_cmd = app.add_subcommand("iterate", "Apply the baker circuit repeatedly to a state");
  add_qubits(iterate_cmd, kMaxQubits);
  auto* state_opt = iterate_cmd->add_option("--state", o.state_path, "Initial state JSON file");
  auto* basis_opt = iterate_cmd->add_option("--basis", o.basis, "Initial position basis index");
  state_opt->excludes(basis_opt);
  iterate_cmd->add_option("--steps", o.steps, "Number of iterations")->required()->check(CLI::NonNegativeNumber);
  add_out(iterate_cmd);

  auto* echo = app.add_subcommand("echo", "Loschmidt echo under random phase kicks (CSV)");
  add_qubits(echo, kMaxQubits);
  echo->add_option("--steps", o.steps)->required()->check(CLI::NonNegativeNumber);
  echo->add_option("--delta", o.delta, "Kick strength")->required()->check(CLI::NonNegativeNumber);
  echo->add_option("--ensemble", o.ensemble)->required()->check(CLI::PositiveNumber);
  echo->add_option("--seed", o.seed)->required();
  add_out(echo);

  auto* formfactor = app.add_subcommand("formfactor", "Spectral form factor |tr T^n|^2 / D (CSV)");
  add_qubits(formfactor, kMaxDenseQubits);
  formfactor->add_option("--nmax", o.nmax)->required()->check(CLI::PositiveNumber);
  add_out(formfactor);

  auto* classical = app.add_subcommand("classical", "Iterate the classical baker's transformation");
  classical->add_option("--q", o.q)->required();
  classical->add_option("--p", o.p)->required();
  classical->add_option("--steps", o.steps)->required()->check(CLI::NonNegativeNumber);

  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("--manifest", o.manifest)->required()->check(CLI::ExistingFile);
  add_out(replay);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*qft_check) return run_qft_check(o, out);
    if (*weyl_check) return run_weyl_check(o, out);
    if (*baker) return run_baker(o, out);
    if (*iterate_cmd) {
      if (o.state_path.empty() && !o.basis) {
        err << "error: iterate needs --state or --basis\n";
        return kExitUsage;
      }
      return run_iterate(o, out);
    }
    if (*echo) return run_echo(o, out);
    if (*formfactor) return run_formfactor(o, out);
    if (*classical) return run_classical(o, out);
    if (*replay) {
      const RunManifest m = manifest_from_json(Json::parse(read_file(o.manifest)));
      if (m.command == "replay") throw DomainError("manifest cannot replay itself");
      return cli_dispatch(replay_args(m, o.out), out, err);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace qbaker
