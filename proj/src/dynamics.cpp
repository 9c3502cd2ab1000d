#include "qbaker/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "qbaker/baker.hpp"
#include "qbaker/dense.hpp"
#include "qbaker/qft.hpp"

namespace qbaker {

namespace {

constexpr double kNormalizedTolerance = 1e-9;

std::vector<double> probabilities(const StateVector& state) {
  if (!state.is_normalized(kNormalizedTolerance))
    throw DomainError("distribution requested for a state with squared norm " + std::to_string(state.squared_norm()));
  std::vector<double> p(static_cast<std::size_t>(state.dim()));
  for (Eigen::Index j = 0; j < state.dim(); ++j) p[static_cast<std::size_t>(j)] = std::norm(state[j]);
  return p;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// |<a|b>|^2 / (<a|a><b|b>). All three overlaps go through the same
/// reduction, so bitwise-equal states give exactly 1.
double normalized_fidelity(const StateVector& a, const StateVector& b) {
  const double ab = std::norm(inner_product(a, b));
  return ab / (inner_product(a, a).real() * inner_product(b, b).real());
}

Trajectory run_member(const EchoConfig& cfg, const Circuit& step, std::uint64_t member) {
  std::mt19937_64 rng(member_seed(cfg.seed, member));
  StateVector reference = basis_state(cfg.qubits, cfg.initial_basis);
  StateVector perturbed = reference;
  const KernelOptions opt{kDftPhaseSign, 1};

  Trajectory out;
  out.reserve(static_cast<std::size_t>(cfg.steps) + 1);
  auto record = [&](int n) {
    TrajectoryRecord r;
    r.step = n;
    r.fidelity = normalized_fidelity(reference, perturbed);
    r.position_entropy = shannon_entropy(position_distribution(perturbed));
    r.momentum_entropy = shannon_entropy(momentum_distribution(perturbed, opt));
    r.norm = perturbed.squared_norm();
    out.push_back(r);
  };

  record(0);
  for (int n = 1; n <= cfg.steps; ++n) {
    apply_circuit_inplace(reference, step, opt);
    apply_circuit_inplace(perturbed, step, opt);
    if (cfg.delta > 0.0) {
      const std::vector<double> angles = kick_angles(rng, cfg.qubits, cfg.delta);
      apply_phase_kick<double>(perturbed, angles);
    }
    record(n);
  }
  return out;
}

}  // namespace

StateVector iterate(StateVector state, int steps, const KernelOptions& opt) {
  if (steps < 0) throw DomainError("iterate: negative step count " + std::to_string(steps));
  if (steps == 0) return state;
  const Circuit step = baker_circuit(state.qubits());
  for (int n = 0; n < steps; ++n) apply_circuit_inplace(state, step, opt);
  return state;
}

std::vector<double> position_distribution(const StateVector& state) { return probabilities(state); }

std::vector<double> momentum_distribution(const StateVector& state, const KernelOptions& opt) {
  probabilities(state);
  return probabilities(apply_circuit(state, qft_circuit(state.qubits()), opt));
}

double shannon_entropy(std::span<const double> distribution) {
  double h = 0.0;
  for (double p : distribution)
    if (p > 0.0) h -= p * std::log(p);
  // rounding can leave -1e-16 for a delta distribution
  return std::max(h, 0.0);
}

std::vector<double> form_factor(int qubits, int n_max, int n_min) {
  if (n_min < 0 || n_min > 1) throw DomainError("form_factor: n_min must be 0 or 1");
  if (n_max < n_min) throw DomainError("form_factor: n_max " + std::to_string(n_max) + " below n_min");
  const UnitaryMatrix t = baker_matrix(qubits);
  const double d = static_cast<double>(t.rows());
  UnitaryMatrix power = dense_identity<double>(qubits);
  std::vector<double> k;
  k.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) power = (t * power).eval();
    if (n >= n_min) k.push_back(std::norm(power.trace()) / d);
  }
  return k;
}

void validate(const EchoConfig& cfg) {
  if (cfg.qubits < 1 || cfg.qubits > kMaxQubits) throw DomainError("echo: qubits out of range");
  if (cfg.steps < 0) throw DomainError("echo: steps must be >= 0");
  if (!(cfg.delta >= 0.0) || !std::isfinite(cfg.delta)) throw DomainError("echo: delta must be finite and >= 0");
  if (cfg.ensemble < 1) throw DomainError("echo: ensemble must be >= 1");
  if (cfg.initial_basis < 0 || static_cast<std::uint64_t>(cfg.initial_basis) >= dimension(cfg.qubits))
    throw DomainError("echo: initial basis index out of range");
}

std::uint64_t member_seed(std::uint64_t seed, std::uint64_t member) {
  return splitmix64(splitmix64(seed) ^ splitmix64(member + 0x632BE59BD9B4E019ULL));
}

std::vector<double> kick_angles(std::mt19937_64& rng, int qubits, double delta) {
  std::vector<double> angles(static_cast<std::size_t>(qubits));
  for (double& a : angles) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    a = delta * (2.0 * u - 1.0);
  }
  return angles;
}

std::vector<Trajectory> loschmidt_echo(const EchoConfig& cfg, int threads) {
  validate(cfg);
  const Circuit step = baker_circuit(cfg.qubits);
  std::vector<Trajectory> out(static_cast<std::size_t>(cfg.ensemble));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) out[i] = run_member(cfg, step, i);
  };
  const int workers = std::clamp(threads, 1, cfg.ensemble);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return out;
}

EnsembleStat mean_fidelity(std::span<const Trajectory> ensemble, int step) {
  if (ensemble.empty()) throw DomainError("mean_fidelity: empty ensemble");
  double sum = 0.0;
  for (const Trajectory& t : ensemble) sum += t.at(static_cast<std::size_t>(step)).fidelity;
  const double n = static_cast<double>(ensemble.size());
  EnsembleStat stat;
  stat.mean = sum / n;
  if (ensemble.size() > 1) {
    double ss = 0.0;
    for (const Trajectory& t : ensemble) {
      const double dev = t[static_cast<std::size_t>(step)].fidelity - stat.mean;
      ss += dev * dev;
    }
    stat.standard_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return stat;
}

}  // namespace qbaker
