#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qbaker/dense.hpp"
#include "qbaker/qft.hpp"

namespace qbaker {

/// Position/momentum and Weyl displacement operators on the quantized torus
/// with D = 2^L, all in the position basis.
template <typename Real = double>
struct BasicPhaseSpaceOperators {
  int qubits = 0;
  Eigen::Index dim = 0;
  DenseMatrix<Real> q_op;  ///< diag(j/D)
  DenseMatrix<Real> p_op;  ///< F'^dagger diag(j/D) F'
  DenseMatrix<Real> u_op;  ///< exp(2 pi i q)
  DenseMatrix<Real> v_op;  ///< exp(-2 pi i p)
  std::complex<Real> epsilon;
};

using PhaseSpaceOperators = BasicPhaseSpaceOperators<double>;

template <typename Real = double>
BasicPhaseSpaceOperators<Real> build_operators(int qubits) {
  if (qubits < 1) throw DomainError("build_operators needs at least one qubit");
  check_dense_size(qubits, kMaxDenseQubits, "build_operators");
  BasicPhaseSpaceOperators<Real> ops;
  ops.qubits = qubits;
  ops.dim = static_cast<Eigen::Index>(dimension(qubits));
  const Real d = static_cast<Real>(ops.dim);
  const Real two_pi = 2 * std::numbers::pi_v<Real>;

  using Vector = Amplitudes<Real>;
  Vector eigenvalues(ops.dim);
  Vector u_phases(ops.dim);
  Vector v_phases(ops.dim);
  for (Eigen::Index j = 0; j < ops.dim; ++j) {
    const Real x = static_cast<Real>(j) / d;
    eigenvalues[j] = x;
    u_phases[j] = std::polar(Real(1), two_pi * x);
    v_phases[j] = std::polar(Real(1), -two_pi * x);
  }

  // p and V are diagonal in the momentum basis; F' changes basis.
  const DenseMatrix<Real> f = dft_matrix<Real>(qubits);
  ++dense_allocation_counter();
  ops.q_op = eigenvalues.asDiagonal().toDenseMatrix();
  ++dense_allocation_counter();
  ops.u_op = u_phases.asDiagonal().toDenseMatrix();
  ops.p_op = f.adjoint() * eigenvalues.asDiagonal() * f;
  ops.v_op = f.adjoint() * v_phases.asDiagonal() * f;
  ops.epsilon = std::polar(Real(1), two_pi / d);
  return ops;
}

struct WeylReport {
  double commutation_residual = 0;  ///< ||UV - eps VU||_F
  double periodicity_residual = 0;  ///< max(||U^D - I||_F, ||V^D - I||_F)
  double threshold = 1e-9;
  bool pass() const { return commutation_residual <= threshold && periodicity_residual <= threshold; }
};

template <typename Real>
WeylReport check_weyl(const BasicPhaseSpaceOperators<Real>& ops) {
  const auto& u = ops.u_op;
  const auto& v = ops.v_op;
  WeylReport report;
  report.commutation_residual = static_cast<double>((u * v - ops.epsilon * (v * u)).norm());

  // U^D and V^D by repeated squaring; D is a power of two.
  DenseMatrix<Real> ud = u;
  DenseMatrix<Real> vd = v;
  for (int i = 0; i < ops.qubits; ++i) {
    ud = (ud * ud).eval();
    vd = (vd * vd).eval();
  }
  const DenseMatrix<Real> id = DenseMatrix<Real>::Identity(ops.dim, ops.dim);
  report.periodicity_residual = static_cast<double>(std::max((ud - id).norm(), (vd - id).norm()));
  return report;
}

}  // namespace qbaker
