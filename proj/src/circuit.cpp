#include "qbaker/circuit.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include "qbaker/errors.hpp"

namespace qbaker {

namespace {

void check_label(int label) {
  if (label < 0) throw DomainError("negative qubit label " + std::to_string(label));
}

Gate two_qubit(GateKind kind, int m, int n, bool conjugated, int order) {
  check_label(m);
  check_label(n);
  if (m == n) throw DomainError("two-qubit gate needs distinct labels, got " + std::to_string(m) + " twice");
  if (order < 0) throw DomainError("negative phase order " + std::to_string(order));
  if (m > n) std::swap(m, n);
  return Gate{kind, m, n, conjugated, order};
}

Gate relabeled(Gate g, std::span<const int> p) {
  if (g.kind == GateKind::A) return gate_a(p[g.m]);
  return two_qubit(g.kind, p[g.m], p[g.n], g.conjugated, g.order);
}

}  // namespace

Gate gate_a(int m) {
  check_label(m);
  return Gate{GateKind::A, m, m, false};
}

Gate gate_b(int m, int n, bool conjugated) { return two_qubit(GateKind::B, m, n, conjugated, std::abs(n - m)); }

Gate gate_b_order(int m, int n, int order, bool conjugated) {
  return two_qubit(GateKind::B, m, n, conjugated, order);
}

Gate gate_swap(int m, int n) { return two_qubit(GateKind::Swap, m, n, false, 0); }

Gate inverse(const Gate& g) {
  Gate inv = g;
  if (g.kind == GateKind::B) inv.conjugated = !g.conjugated;
  return inv;
}

bool is_diagonal(const Gate& g) { return g.kind == GateKind::B; }

bool commutes(const Gate& a, const Gate& b) {
  if (is_diagonal(a) && is_diagonal(b)) return true;
  const bool disjoint = a.m != b.m && a.m != b.n && a.n != b.m && a.n != b.n;
  return disjoint;
}

int max_label(const Gate& g) { return std::max(g.m, g.n); }

std::string to_string(const Gate& g) {
  switch (g.kind) {
    case GateKind::A:
      return "A " + std::to_string(g.m);
    case GateKind::B: {
      std::string s = (g.conjugated ? "Bdg " : "B ") + std::to_string(g.m) + " " + std::to_string(g.n);
      if (g.order != g.n - g.m) s += " " + std::to_string(g.order);
      return s;
    }
    case GateKind::Swap:
      return "SWAP " + std::to_string(g.m) + " " + std::to_string(g.n);
  }
  return {};
}

Permutation identity_permutation(int qubits) {
  Permutation p(static_cast<std::size_t>(qubits));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(std::span<const int> p, int qubits) {
  if (static_cast<int>(p.size()) != qubits) return false;
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= qubits || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool is_identity(std::span<const int> p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k)) return false;
  return true;
}

Permutation inverse_permutation(std::span<const int> p) {
  Permutation inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) inv[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
  return inv;
}

std::uint64_t permute_index(std::uint64_t j, std::span<const int> p) {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < p.size(); ++k) out |= ((j >> k) & 1U) << p[k];
  return out;
}

Circuit::Circuit(int qubits) : qubits_(qubits), relabel_(identity_permutation(qubits)) {
  if (qubits < 1) throw DomainError("circuit needs at least one qubit");
}

Circuit::Circuit(int qubits, std::initializer_list<Gate> gates) : Circuit(qubits) {
  for (const Gate& g : gates) push_back(g);
}

Circuit::Circuit(int qubits, std::vector<Gate> gates, Permutation relabel) : Circuit(qubits) {
  for (const Gate& g : gates) check(g);
  if (!is_permutation(relabel, qubits)) throw DomainError("relabel is not a permutation of the qubit labels");
  gates_ = std::move(gates);
  relabel_ = std::move(relabel);
}

void Circuit::check(const Gate& g) const {
  if (max_label(g) >= qubits_)
    throw DomainError("gate '" + to_string(g) + "' uses a label >= " + std::to_string(qubits_));
}

Circuit& Circuit::push_back(const Gate& g) {
  check(g);
  gates_.push_back(is_identity(relabel_) ? g : relabeled(g, relabel_));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.qubits_ != qubits_)
    throw DomainError("cannot compose circuits on " + std::to_string(qubits_) + " and " +
                      std::to_string(other.qubits_) + " qubits");
  for (const Gate& g : other.gates_) push_back(g);
  Permutation composed(relabel_.size());
  for (std::size_t k = 0; k < composed.size(); ++k)
    composed[k] = relabel_[static_cast<std::size_t>(other.relabel_[k])];
  relabel_ = std::move(composed);
  return *this;
}

Circuit concat(const Circuit& c1, const Circuit& c2) {
  Circuit out = c1;
  out.append(c2);
  return out;
}

Circuit dagger(const Circuit& c) {
  // (M_p G)^-1 = G^-1 M_p^-1 = M_{p^-1} (p^-1 relabeling of G^-1)
  const Permutation pinv = inverse_permutation(c.relabel());
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it)
    gates.push_back(relabeled(inverse(*it), pinv));
  return Circuit(c.qubits(), std::move(gates), pinv);
}

Circuit elide_swaps(const Circuit& c) {
  Permutation where = identity_permutation(c.qubits());
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Swap)
      std::swap(where[static_cast<std::size_t>(g.m)], where[static_cast<std::size_t>(g.n)]);
    else
      gates.push_back(relabeled(g, where));
  }
  Permutation relabel(where.size());
  for (std::size_t k = 0; k < relabel.size(); ++k)
    relabel[k] = where[static_cast<std::size_t>(c.relabel()[k])];
  return Circuit(c.qubits(), std::move(gates), std::move(relabel));
}

GateCount gate_count(const Circuit& c) {
  GateCount count;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::A: ++count.a; break;
      case GateKind::B: ++count.b; break;
      case GateKind::Swap: ++count.swap; break;
    }
  }
  return count;
}

Circuit normal_form(const Circuit& c) {
  std::vector<Gate> pending = c.gates();
  std::vector<Gate> out;
  out.reserve(pending.size());
  while (!pending.empty()) {
    std::size_t best = pending.size();
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const bool free = std::all_of(pending.begin(), pending.begin() + static_cast<std::ptrdiff_t>(i),
                                    [&](const Gate& earlier) { return commutes(earlier, pending[i]); });
      if (free && (best == pending.size() || pending[i] < pending[best])) best = i;
    }
    out.push_back(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return Circuit(c.qubits(), std::move(out), c.relabel());
}

}  // namespace qbaker
