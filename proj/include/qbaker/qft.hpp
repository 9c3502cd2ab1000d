#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "qbaker/circuit.hpp"
#include "qbaker/convention.hpp"
#include "qbaker/dense.hpp"

namespace qbaker {

/// Sign/order convention linking the QFT gate network to the DFT matrix.
struct DftConvention {
  int phase_sign = kDftPhaseSign;
  /// Operator products are converted to application order by reversal
  /// (rightmost factor acts first), in qft_circuit only.
  enum class Ordering { ProductRightFirst } ordering = Ordering::ProductRightFirst;
};

/// (F'_L)_{kj} = e^{-2 pi i k j / D} / sqrt(D), position basis in, momentum out.
/// L = 0 gives the 1 x 1 identity.
template <typename Real = double>
DenseMatrix<Real> dft_matrix(int qubits, int max_qubits = kMaxDenseQubits) {
  DenseMatrix<Real> f = dense_zero<Real>(qubits, max_qubits);
  const auto d = f.rows();
  const Real norm = Real(1) / std::sqrt(static_cast<Real>(d));
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index j = 0; j < d; ++j) {
      // reduce k*j mod D first so the angle stays in [0, 2 pi)
      const auto kj = static_cast<Real>((k * j) % d);
      f(k, j) = norm * std::polar(Real(1), -2 * std::numbers::pi_v<Real> * kj / static_cast<Real>(d));
    }
  return f;
}

/// QFT network F_L = S (A_0 B_01 ... B_0,L-1) ... (A_L-2 B_L-2,L-1)(A_L-1) in
/// application order: blocks m = L-1 .. 0, each B_{m,L-1} .. B_{m,m+1} then
/// A_m, followed by the bit-reversal swaps (0,L-1), (1,L-2), ...
Circuit qft_circuit(int qubits);

/// qft_circuit(low_qubits) placed on qubits 0..low_qubits-1 of an L-qubit
/// register, identity on the rest.
Circuit qft_block_circuit(int qubits, int low_qubits);

}  // namespace qbaker
