#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qbaker/circuit.hpp"
#include "qbaker/convention.hpp"
#include "qbaker/errors.hpp"
#include "qbaker/state.hpp"

// Dense D x D matrices for the verification path only. Nothing in the
// simulation path includes this header.

namespace qbaker {

template <typename Real>
using DenseMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
using UnitaryMatrix = DenseMatrix<double>;

inline constexpr int kMaxDenseQubits = 10;
/// Hard ceiling reachable only through an explicit override.
inline constexpr int kMaxDenseQubitsOverride = 12;

/// Number of dense D x D matrices created through this header.
inline std::atomic<std::uint64_t>& dense_allocation_counter() {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}

inline void check_dense_size(int qubits, int max_qubits, const char* what) {
  if (max_qubits > kMaxDenseQubitsOverride) max_qubits = kMaxDenseQubitsOverride;
  if (qubits < 0 || qubits > max_qubits)
    throw SizeError(std::string(what) + ": " + std::to_string(qubits) + " qubits exceeds the dense limit of " +
                    std::to_string(max_qubits));
}

template <typename Real>
DenseMatrix<Real> dense_zero(int qubits, int max_qubits = kMaxDenseQubits) {
  check_dense_size(qubits, max_qubits, "dense matrix");
  ++dense_allocation_counter();
  const auto d = static_cast<Eigen::Index>(dimension(qubits));
  return DenseMatrix<Real>::Zero(d, d);
}

template <typename Real>
DenseMatrix<Real> dense_identity(int qubits, int max_qubits = kMaxDenseQubits) {
  DenseMatrix<Real> m = dense_zero<Real>(qubits, max_qubits);
  m.setIdentity();
  return m;
}

namespace detail {

template <typename Real>
using SparseGate = Eigen::SparseMatrix<std::complex<Real>>;

/// Gate matrix straight from its definition, entry by entry.
template <typename Real>
SparseGate<Real> sparse_gate(int qubits, const Gate& g, int phase_sign) {
  const std::uint64_t dim = dimension(qubits);
  std::vector<Eigen::Triplet<std::complex<Real>>> entries;
  entries.reserve(static_cast<std::size_t>(2 * dim));
  switch (g.kind) {
    case GateKind::A: {
      const Real s = Real(1) / std::sqrt(Real(2));
      for (std::uint64_t c = 0; c < dim; ++c) {
        const std::uint64_t flipped = c ^ (std::uint64_t{1} << g.m);
        // Row r = c keeps sign -1 only on the |1><1| element.
        entries.emplace_back(c, c, bit(c, g.m) ? -s : s);
        entries.emplace_back(flipped, c, s);
      }
      break;
    }
    case GateKind::B: {
      const Real phi = std::numbers::pi_v<Real> / std::pow(Real(2), g.order);
      const Real angle = (g.conjugated ? -phase_sign : phase_sign) * phi;
      for (std::uint64_t j = 0; j < dim; ++j) {
        const bool both = bit(j, g.m) == 1 && bit(j, g.n) == 1;
        entries.emplace_back(j, j, both ? std::exp(std::complex<Real>(0, angle)) : std::complex<Real>(1));
      }
      break;
    }
    case GateKind::Swap:
      for (std::uint64_t j = 0; j < dim; ++j) {
        std::uint64_t k = j & ~((std::uint64_t{1} << g.m) | (std::uint64_t{1} << g.n));
        k |= static_cast<std::uint64_t>(bit(j, g.n)) << g.m;
        k |= static_cast<std::uint64_t>(bit(j, g.m)) << g.n;
        entries.emplace_back(k, j, Real(1));
      }
      break;
  }
  const auto d = static_cast<Eigen::Index>(dim);
  SparseGate<Real> m(d, d);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

}  // namespace detail

template <typename Real = double>
DenseMatrix<Real> gate_matrix(int qubits, const Gate& g, int phase_sign = kDftPhaseSign) {
  if (max_label(g) >= qubits) throw DomainError("gate '" + to_string(g) + "' does not fit " + std::to_string(qubits) + " qubits");
  check_dense_size(qubits, kMaxDenseQubits, "gate_matrix");
  ++dense_allocation_counter();
  return DenseMatrix<Real>(detail::sparse_gate<Real>(qubits, g, phase_sign));
}

/// Permutation matrix R with R(j, permute_index(j, p)) = 1.
template <typename Real = double>
DenseMatrix<Real> relabel_matrix(std::span<const int> p, int max_qubits = kMaxDenseQubits) {
  const int qubits = static_cast<int>(p.size());
  DenseMatrix<Real> m = dense_zero<Real>(qubits, max_qubits);
  for (std::uint64_t j = 0; j < dimension(qubits); ++j)
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(permute_index(j, p))) = Real(1);
  return m;
}

/// Dense product of the gate matrices in application order, then the relabel.
template <typename Real = double>
DenseMatrix<Real> circuit_to_matrix(const Circuit& c, int phase_sign = kDftPhaseSign,
                                    int max_qubits = kMaxDenseQubits) {
  check_dense_size(c.qubits(), max_qubits, "circuit_to_matrix");
  DenseMatrix<Real> u = dense_identity<Real>(c.qubits(), max_qubits);
  for (const Gate& g : c.gates()) {
    const DenseMatrix<Real> next = detail::sparse_gate<Real>(c.qubits(), g, phase_sign) * u;
    u = next;
  }
  if (!is_identity(c.relabel())) u = relabel_matrix<Real>(c.relabel(), max_qubits) * u;
  return u;
}

/// ||U^dagger U - I||_F
template <typename Derived>
double unitarity_residual(const Eigen::MatrixBase<Derived>& u) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Matrix gram = u.adjoint() * u;
  return (gram - Matrix::Identity(u.rows(), u.cols())).norm();
}

template <typename A, typename B>
double frobenius_distance(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).norm();
}

}  // namespace qbaker
