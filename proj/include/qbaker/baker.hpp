#pragma once

#include "qbaker/circuit.hpp"
#include "qbaker/dense.hpp"
#include "qbaker/qft.hpp"

namespace qbaker {

/// Point of the unit square, q position and p momentum.
struct ClassicalPoint {
  double q = 0;
  double p = 0;
  friend bool operator==(const ClassicalPoint&, const ClassicalPoint&) = default;
};

/// (2q, p/2) for q <= 1/2, else (2q - 1, (p + 1)/2).
ClassicalPoint classical_step(ClassicalPoint pt);

/// T' = F'_L^{-1} diag(F'_{L-1}, F'_{L-1}) in the position basis.
template <typename Real = double>
DenseMatrix<Real> baker_matrix(int qubits, int max_qubits = kMaxDenseQubits) {
  if (qubits < 1) throw DomainError("baker_matrix needs at least one qubit");
  check_dense_size(qubits, max_qubits, "baker_matrix");
  const DenseMatrix<Real> f = dft_matrix<Real>(qubits, max_qubits);
  const DenseMatrix<Real> half = dft_matrix<Real>(qubits - 1, max_qubits);
  DenseMatrix<Real> blocks = dense_zero<Real>(qubits, max_qubits);
  const Eigen::Index h = half.rows();
  blocks.topLeftCorner(h, h) = half;
  blocks.bottomRightCorner(h, h) = half;
  // F' is unitary, so its inverse is its adjoint.
  return f.adjoint() * blocks;
}

/// T = F_L^{-1} (I (x) F_{L-1}): the QFT block on qubits 0..L-2, then the
/// inverse QFT network on all L qubits. The identity acts on qubit L-1.
Circuit baker_circuit(int qubits);

/// The 3-qubit sequence
///   T = S02 A0 B01dg B02dg A1 B12dg A2 S01 A0 B01 A1
/// written as an operator product, stored in application order.
Circuit three_qubit_circuit();

}  // namespace qbaker
