#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "qbaker/gate.hpp"

namespace qbaker {

/// Qubit permutation: entry k is the physical label holding logical qubit k.
using Permutation = std::vector<int>;

Permutation identity_permutation(int qubits);
bool is_permutation(std::span<const int> p, int qubits);
bool is_identity(std::span<const int> p);
Permutation inverse_permutation(std::span<const int> p);

/// Maps logical index j to the physical index sum_k j_k 2^{p_k}.
std::uint64_t permute_index(std::uint64_t j, std::span<const int> p);

/// Ordered gate list over a fixed number of qubits, stored in application
/// order (front acts first), followed by an optional pending relabeling.
///
/// The realized operator is M_relabel * g_last * ... * g_first, where
/// M_relabel moves physical bit relabel[k] to logical bit k.
class Circuit {
 public:
  explicit Circuit(int qubits);
  Circuit(int qubits, std::initializer_list<Gate> gates);
  Circuit(int qubits, std::vector<Gate> gates, Permutation relabel);

  int qubits() const { return qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const Permutation& relabel() const { return relabel_; }
  bool empty() const { return gates_.empty(); }
  std::size_t size() const { return gates_.size(); }

  /// Appends a gate acting on logical labels. With a pending relabel the
  /// gate is rewritten onto the physical label that currently holds it.
  Circuit& push_back(const Gate& g);

  /// Sequential composition: `other` acts after everything already here.
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check(const Gate& g) const;

  int qubits_;
  std::vector<Gate> gates_;
  Permutation relabel_;
};

/// c2 after c1.
Circuit concat(const Circuit& c1, const Circuit& c2);

/// Inverse circuit: reversed gate list of inverses, relabel inverted.
Circuit dagger(const Circuit& c);

/// Removes every Swap by tracking where each logical qubit lives. Remaining
/// gates are rewritten onto physical labels and the final placement is
/// returned as the relabel permutation. Realizes the same unitary.
Circuit elide_swaps(const Circuit& c);

struct GateCount {
  int a = 0;
  int b = 0;
  int swap = 0;
  friend bool operator==(const GateCount&, const GateCount&) = default;
};

GateCount gate_count(const Circuit& c);

/// Commutation normal form: repeatedly emits the smallest gate (by operator<=>)
/// that commutes with every gate still ahead of it. Two circuits that differ
/// only by reordering commuting gates have equal normal forms.
Circuit normal_form(const Circuit& c);

}  // namespace qbaker
