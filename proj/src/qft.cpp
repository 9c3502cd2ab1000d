#include "qbaker/qft.hpp"

#include <string>

namespace qbaker {

Circuit qft_circuit(int qubits) {
  if (qubits < 1) throw DomainError("qft_circuit needs at least one qubit");
  Circuit c(qubits);
  for (int m = qubits - 1; m >= 0; --m) {
    for (int n = qubits - 1; n > m; --n) c.push_back(gate_b(m, n));
    c.push_back(gate_a(m));
  }
  for (int k = 0; k < qubits / 2; ++k) c.push_back(gate_swap(k, qubits - 1 - k));
  return c;
}

Circuit qft_block_circuit(int qubits, int low_qubits) {
  if (low_qubits < 1 || low_qubits > qubits)
    throw DomainError("qft_block_circuit: low_qubits " + std::to_string(low_qubits) + " outside [1, " +
                      std::to_string(qubits) + "]");
  const Circuit block = qft_circuit(low_qubits);
  return Circuit(qubits, block.gates(), identity_permutation(qubits));
}

}  // namespace qbaker
