#pragma once

#include <compare>
#include <string>

namespace qbaker {

enum class GateKind { A, B, Swap };

/// One of the three primitive gates.
///
///   A(m)       single-qubit mixer (1, 1; 1, -1)/sqrt(2) on qubit m
///   B(m, n)    conditional phase on j_m = j_n = 1 with angle pi/2^order
///   Swap(m, n) exchanges qubits m and n
///
/// B and Swap are symmetric in their labels and are stored with m < n.
/// `conjugated` and `order` are only meaningful for B. A B gate built from
/// labels gets order = |n - m|; relabeling moves the labels and keeps the
/// order, so the angle always reflects the labels it was created with.
struct Gate {
  GateKind kind = GateKind::A;
  int m = 0;
  int n = 0;
  bool conjugated = false;
  int order = 0;

  friend auto operator<=>(const Gate&, const Gate&) = default;
};

Gate gate_a(int m);
Gate gate_b(int m, int n, bool conjugated = false);
/// B on (m, n) with an explicit angle pi/2^order.
Gate gate_b_order(int m, int n, int order, bool conjugated = false);
inline Gate gate_bdg(int m, int n) { return gate_b(m, n, true); }
Gate gate_swap(int m, int n);

/// A and Swap are involutions; B flips its conjugation flag.
Gate inverse(const Gate& g);

bool is_diagonal(const Gate& g);

/// True when the two gates commute as operators for every phase sign:
/// disjoint supports, or both diagonal.
bool commutes(const Gate& a, const Gate& b);

/// Largest qubit label the gate touches.
int max_label(const Gate& g);

/// `A 0`, `B 0 1`, `Bdg 0 1`, `SWAP 0 2`; a B whose order differs from
/// its label distance gets the order appended (`B 0 2 1`).
std::string to_string(const Gate& g);

}  // namespace qbaker
