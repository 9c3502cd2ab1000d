#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "qbaker/circuit.hpp"
#include "qbaker/convention.hpp"
#include "qbaker/errors.hpp"
#include "qbaker/state.hpp"

namespace qbaker {

/// Kernels only split work across threads from this many qubits up.
inline constexpr int kParallelMinQubits = 16;

/// Worker count from QBAKER_THREADS, default 1.
inline int default_threads() {
  static const int threads = [] {
    const char* env = std::getenv("QBAKER_THREADS");
    if (env == nullptr) return 1;
    const int n = std::atoi(env);
    return n >= 1 ? n : 1;
  }();
  return threads;
}

struct KernelOptions {
  int phase_sign = kDftPhaseSign;
  int threads = default_threads();
};

namespace detail {

/// Inserts a zero bit at position `pos`.
constexpr std::uint64_t insert_zero(std::uint64_t i, int pos) {
  const std::uint64_t low = i & ((std::uint64_t{1} << pos) - 1);
  return ((i >> pos) << (pos + 1)) | low;
}

/// Runs body(begin, end) over [0, count). Chunks are disjoint, so the result
/// does not depend on the thread count as long as body writes disjoint data.
template <typename Body>
void for_range(std::uint64_t count, int qubits, int threads, Body&& body) {
  if (qubits < kParallelMinQubits || threads <= 1) {
    body(std::uint64_t{0}, count);
    return;
  }
  const auto workers = static_cast<std::uint64_t>(threads);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::uint64_t begin = 0; begin < count; begin += chunk)
    pool.emplace_back([&body, begin, end = std::min(count, begin + chunk)] { body(begin, end); });
}

template <typename Real>
void mix(Amplitudes<Real>& amp, int qubits, int m, int threads) {
  const std::uint64_t mask = std::uint64_t{1} << m;
  const Real s = Real(1) / std::numbers::sqrt2_v<Real>;
  std::complex<Real>* data = amp.data();
  for_range(dimension(qubits) / 2, qubits, threads, [=](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t i0 = insert_zero(i, m);
      const std::uint64_t i1 = i0 | mask;
      const std::complex<Real> a0 = data[i0];
      const std::complex<Real> a1 = data[i1];
      data[i0] = s * (a0 + a1);
      data[i1] = s * (a0 - a1);
    }
  });
}

template <typename Real>
void conditional_phase(Amplitudes<Real>& amp, int qubits, int m, int n, Real angle, int threads) {
  const std::uint64_t both = (std::uint64_t{1} << m) | (std::uint64_t{1} << n);
  const std::complex<Real> phase = std::polar(Real(1), angle);
  std::complex<Real>* data = amp.data();
  for_range(dimension(qubits) / 4, qubits, threads, [=](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) data[insert_zero(insert_zero(i, m), n) | both] *= phase;
  });
}

template <typename Real>
void swap_bits(Amplitudes<Real>& amp, int qubits, int m, int n, int threads) {
  const std::uint64_t bm = std::uint64_t{1} << m;
  const std::uint64_t bn = std::uint64_t{1} << n;
  std::complex<Real>* data = amp.data();
  for_range(dimension(qubits) / 4, qubits, threads, [=](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t base = insert_zero(insert_zero(i, m), n);
      std::swap(data[base | bm], data[base | bn]);
    }
  });
}

}  // namespace detail

/// Phase angle of a B gate: sign * pi / 2^order, negated when conjugated.
template <typename Real = double>
Real b_phase(const Gate& g, int phase_sign = kDftPhaseSign) {
  const Real angle = std::numbers::pi_v<Real> / std::ldexp(Real(1), g.order);
  return (g.conjugated ? -phase_sign : phase_sign) * angle;
}

/// Applies one gate in place. Touches each amplitude at most once; O(D).
template <typename Real>
void apply_gate_inplace(BasicStateVector<Real>& state, const Gate& g, const KernelOptions& opt = {}) {
  const int L = state.qubits();
  if (g.m < 0 || g.n < 0 || max_label(g) >= L)
    throw DomainError("gate '" + to_string(g) + "' does not fit a " + std::to_string(L) + "-qubit state");
  // Gates built through the Gate struct directly may skip canonicalization.
  const int lo = std::min(g.m, g.n);
  const int hi = std::max(g.m, g.n);
  switch (g.kind) {
    case GateKind::A:
      detail::mix(state.amplitudes(), L, g.m, opt.threads);
      break;
    case GateKind::B:
      if (lo == hi) throw DomainError("B gate needs two distinct qubits");
      detail::conditional_phase(state.amplitudes(), L, lo, hi, b_phase<Real>(g, opt.phase_sign), opt.threads);
      break;
    case GateKind::Swap:
      if (lo == hi) throw DomainError("SWAP gate needs two distinct qubits");
      detail::swap_bits(state.amplitudes(), L, lo, hi, opt.threads);
      break;
  }
}

template <typename Real>
BasicStateVector<Real> apply_gate(BasicStateVector<Real> state, const Gate& g, const KernelOptions& opt = {}) {
  apply_gate_inplace(state, g, opt);
  return state;
}

/// Moves physical bit p_k to logical bit k: out[j] = in[permute_index(j, p)].
template <typename Real>
void materialize_relabel(BasicStateVector<Real>& state, std::span<const int> p) {
  if (is_identity(p)) return;
  const auto& in = state.amplitudes();
  Amplitudes<Real> out(in.size());
  for (Eigen::Index j = 0; j < in.size(); ++j)
    out[j] = in[static_cast<Eigen::Index>(permute_index(static_cast<std::uint64_t>(j), p))];
  state.amplitudes() = std::move(out);
}

/// Runs the gate list on physical labels, then materializes the relabel once.
template <typename Real>
void apply_circuit_inplace(BasicStateVector<Real>& state, const Circuit& c, const KernelOptions& opt = {}) {
  if (state.qubits() != c.qubits())
    throw DomainError("circuit on " + std::to_string(c.qubits()) + " qubits applied to a " +
                      std::to_string(state.qubits()) + "-qubit state");
  for (const Gate& g : c.gates()) apply_gate_inplace(state, g, opt);
  materialize_relabel(state, c.relabel());
}

template <typename Real>
BasicStateVector<Real> apply_circuit(BasicStateVector<Real> state, const Circuit& c, const KernelOptions& opt = {}) {
  apply_circuit_inplace(state, c, opt);
  return state;
}

/// Diagonal kick: amplitude j picks up exp(i sum_k angles[k] j_k).
template <typename Real>
void apply_phase_kick(BasicStateVector<Real>& state, std::span<const Real> angles) {
  if (static_cast<int>(angles.size()) != state.qubits())
    throw DomainError("phase kick needs one angle per qubit");
  auto& amp = state.amplitudes();
  for (int k = 0; k < state.qubits(); ++k) {
    const std::complex<Real> phase = std::polar(Real(1), angles[static_cast<std::size_t>(k)]);
    for (Eigen::Index j = 0; j < amp.size(); ++j)
      if (bit(static_cast<std::uint64_t>(j), k)) amp[j] *= phase;
  }
}

}  // namespace qbaker
