#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qbaker/kernels.hpp"
#include "qbaker/state.hpp"

namespace qbaker {

/// Applies baker_circuit `steps` times through the gate kernels.
StateVector iterate(StateVector state, int steps, const KernelOptions& opt = {});

/// |psi_j|^2. Throws DomainError for a state that is not normalized.
std::vector<double> position_distribution(const StateVector& state);

/// |(F' psi)_k|^2, with F' applied through the QFT gate network.
std::vector<double> momentum_distribution(const StateVector& state, const KernelOptions& opt = {});

/// -sum p ln p in nats; zero entries contribute nothing.
double shannon_entropy(std::span<const double> distribution);

/// K(n) = |tr T'^n|^2 / D for n = n_min..n_max (n_min is 0 or 1), from
/// repeated dense multiplication.
std::vector<double> form_factor(int qubits, int n_max, int n_min = 1);

enum class PerturbationKind { RandomPhaseKick };

struct EchoConfig {
  int qubits = 3;
  int steps = 10;
  double delta = 0.0;
  int ensemble = 1;
  std::uint64_t seed = 0;
  PerturbationKind perturbation = PerturbationKind::RandomPhaseKick;
  /// Both trajectories start from |q_initial_basis>.
  std::int64_t initial_basis = 0;
};

void validate(const EchoConfig& cfg);

struct TrajectoryRecord {
  int step = 0;
  double fidelity = 1.0;          ///< overlap of perturbed and unperturbed states
  double position_entropy = 0.0;  ///< of the perturbed state
  double momentum_entropy = 0.0;
  double norm = 1.0;              ///< squared norm of the perturbed state
};

using Trajectory = std::vector<TrajectoryRecord>;

/// Independent stream seed for ensemble member `member`.
std::uint64_t member_seed(std::uint64_t seed, std::uint64_t member);

/// Uniform angles in [-delta, delta], one per qubit.
std::vector<double> kick_angles(std::mt19937_64& rng, int qubits, double delta);

/// One trajectory per ensemble member, records for steps 0..cfg.steps. Each
/// step applies the baker circuit to both states and a fresh random phase
/// kick to the perturbed one. Members run on `threads` workers; the output
/// does not depend on the worker count.
std::vector<Trajectory> loschmidt_echo(const EchoConfig& cfg, int threads = default_threads());

struct EnsembleStat {
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Mean fidelity over members at `step`, with the standard error of the mean.
EnsembleStat mean_fidelity(std::span<const Trajectory> ensemble, int step);

}  // namespace qbaker
