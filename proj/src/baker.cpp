#include "qbaker/baker.hpp"

#include <string>

namespace qbaker {

ClassicalPoint classical_step(ClassicalPoint pt) {
  if (!(pt.q >= 0.0 && pt.q <= 1.0 && pt.p >= 0.0 && pt.p <= 1.0))
    throw DomainError("classical point (" + std::to_string(pt.q) + ", " + std::to_string(pt.p) +
                      ") is outside the unit square");
  if (pt.q <= 0.5) return {2.0 * pt.q, 0.5 * pt.p};
  return {2.0 * pt.q - 1.0, 0.5 * (pt.p + 1.0)};
}

Circuit baker_circuit(int qubits) {
  if (qubits < 1) throw DomainError("baker_circuit needs at least one qubit");
  const Circuit inverse_qft = dagger(qft_circuit(qubits));
  if (qubits == 1) return inverse_qft;
  return concat(qft_block_circuit(qubits, qubits - 1), inverse_qft);
}

Circuit three_qubit_circuit() {
  // Right to left: A1 acts first, S02 last.
  return Circuit(3, {
                        gate_a(1),
                        gate_b(0, 1),
                        gate_a(0),
                        gate_swap(0, 1),
                        gate_a(2),
                        gate_bdg(1, 2),
                        gate_a(1),
                        gate_bdg(0, 2),
                        gate_bdg(0, 1),
                        gate_a(0),
                        gate_swap(0, 2),
                    });
}

}  // namespace qbaker
