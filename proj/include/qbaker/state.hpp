#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "qbaker/errors.hpp"

namespace qbaker {

template <typename Real>
using Amplitudes = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

inline constexpr int kMaxQubits = 30;

inline std::uint64_t dimension(int qubits) { return std::uint64_t{1} << qubits; }

/// Bit j_k of a position-basis label j = sum_k j_k 2^k.
constexpr int bit(std::uint64_t j, int k) { return static_cast<int>((j >> k) & 1U); }

/// Pure state of L qubits in the position basis. Amplitude j is <q_j|psi>,
/// where qubit k is the 2^k binary digit of j (qubit L-1 most significant).
template <typename Real>
class BasicStateVector {
 public:
  using Scalar = std::complex<Real>;
  using Vector = Amplitudes<Real>;

  explicit BasicStateVector(int qubits) : qubits_(check_qubits(qubits)) {
    amplitudes_ = Vector::Zero(static_cast<Eigen::Index>(dimension(qubits)));
  }

  BasicStateVector(int qubits, Vector amplitudes)
      : qubits_(check_qubits(qubits)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::uint64_t>(amplitudes_.size()) != dimension(qubits_))
      throw DomainError("amplitude count " + std::to_string(amplitudes_.size()) +
                        " does not equal 2^" + std::to_string(qubits_));
  }

  int qubits() const { return qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

  const Vector& amplitudes() const { return amplitudes_; }
  /// Mutable view for in-place gate kernels.
  Vector& amplitudes() { return amplitudes_; }

  Scalar operator[](Eigen::Index j) const { return amplitudes_[j]; }

  Real squared_norm() const { return amplitudes_.squaredNorm(); }

  bool is_normalized(Real tol = Real(1e-12)) const {
    return std::abs(squared_norm() - Real(1)) <= tol;
  }

  /// Never called implicitly by any kernel.
  void renormalize() {
    const Real n = amplitudes_.norm();
    if (n == Real(0)) throw DomainError("cannot renormalize the zero vector");
    amplitudes_ /= n;
  }

 private:
  static int check_qubits(int qubits) {
    if (qubits < 1 || qubits > kMaxQubits)
      throw DomainError("qubit count " + std::to_string(qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
    return qubits;
  }

  int qubits_;
  Vector amplitudes_;
};

using StateVector = BasicStateVector<double>;

template <typename Real = double>
BasicStateVector<Real> basis_state(int qubits, std::int64_t j) {
  BasicStateVector<Real> s(qubits);
  if (j < 0 || static_cast<std::uint64_t>(j) >= dimension(qubits))
    throw DomainError("basis index " + std::to_string(j) + " outside [0, 2^" +
                      std::to_string(qubits) + ")");
  s.amplitudes()[j] = Real(1);
  return s;
}

/// sum_j conj(a_j) b_j
template <typename Real>
std::complex<Real> inner_product(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  if (a.qubits() != b.qubits())
    throw DomainError("inner_product: qubit counts differ (" + std::to_string(a.qubits()) +
                      " vs " + std::to_string(b.qubits()) + ")");
  return a.amplitudes().dot(b.amplitudes());
}

template <typename Real>
Real fidelity(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  return std::norm(inner_product(a, b));
}

/// hbar on the quantized torus: 2 pi hbar = 1/D.
inline double hbar(int qubits) {
  return 1.0 / (2.0 * std::numbers::pi * static_cast<double>(dimension(qubits)));
}

}  // namespace qbaker
