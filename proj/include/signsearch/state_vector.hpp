#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signsearch/errors.hpp"
#include "signsearch/oracle.hpp"
#include "signsearch/random.hpp"

namespace signsearch {

// Norm drift allowed before a state counts as unnormalized.
inline constexpr double kNormTolerance = 1e-9;
// Tolerance for exactness assertions (involutions, closed-form amplitudes).
inline constexpr double kExactTolerance = 1e-12;

// Render a label as an n-bit string, qubit 1 (MSB) first. Reports always
// show both this and the integer form so the bit convention is self-evident.
inline std::string bit_string(std::uint64_t label, int n_bits) {
  std::string s(static_cast<std::size_t>(n_bits), '0');
  for (int i = 0; i < n_bits; ++i)
    if (label >> (n_bits - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

// Real-amplitude statevector over 2^q basis labels.
//
// Conventions, used everywhere in this project:
//   - qubits are numbered 1..q; qubit 1 is the most significant bit of the
//     basis label, qubit q the least significant;
//   - when a register is split as n main qubits plus one ancilla, the
//     ancilla is qubit n+1, i.e. the least significant bit, so the label
//     |0...0>|1> has integer value 1;
//   - every gate here is real orthogonal, so amplitudes stay real by
//     construction. This is a deliberate scope restriction, not a general
//     simulator.
//
// Gates mutate the amplitude array in place with stride arithmetic; one
// StateVector must not be mutated concurrently. Values move freely between
// threads.
class StateVector {
 public:
  StateVector(int num_qubits, std::uint64_t basis_label)
      : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 30)
      throw DomainError("qubit count out of range");
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (basis_label >= dim)
      throw DomainError("basis label " + std::to_string(basis_label) +
                        " out of range for " + std::to_string(num_qubits) +
                        " qubits");
    amps_.assign(dim, 0.0);
    amps_[basis_label] = 1.0;
  }

  // Unvalidated raw construction; used by tests and the planted-state
  // helpers, which guarantee the length and norm themselves.
  StateVector(int num_qubits, std::vector<double> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {
    if (amps_.size() != (std::uint64_t{1} << num_qubits))
      throw DomainError("amplitude array length must be 2^q");
  }

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return amps_.size(); }
  const std::vector<double>& amps() const { return amps_; }
  std::vector<double>& mutable_amps() { return amps_; }

  double amplitude(std::uint64_t label) const {
    if (label >= dim()) throw DomainError("label out of range");
    return amps_[label];
  }

  double norm_squared() const {
    double s = 0.0;
    for (double a : amps_) s += a * a;
    return s;
  }

  // Hadamard on one qubit: the usual (1/sqrt2) [[1,1],[1,-1]] butterfly over
  // pairs of labels differing in that qubit's bit.
  void apply_hadamard(int qubit) {
    const std::uint64_t mask = bit_mask(qubit);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::uint64_t i = 0; i < dim(); ++i) {
      if (i & mask) continue;
      const std::uint64_t j = i | mask;
      const double a = amps_[i], b = amps_[j];
      amps_[i] = (a + b) * inv_sqrt2;
      amps_[j] = (a - b) * inv_sqrt2;
    }
  }

  // CZ: negate amplitudes with both bits set. Symmetric in (a, b).
  void apply_cz(int qubit_a, int qubit_b) {
    if (qubit_a == qubit_b) throw DomainError("cz needs two distinct qubits");
    const std::uint64_t mask = bit_mask(qubit_a) | bit_mask(qubit_b);
    for (std::uint64_t i = 0; i < dim(); ++i)
      if ((i & mask) == mask) amps_[i] = -amps_[i];
  }

  // H on every qubit in [first_target, last_target], applied only on the
  // subspace where `control` is 1. Equals the controlled Walsh-Hadamard
  // block because the per-qubit controlled-H factors commute.
  void apply_controlled_hadamard_block(int first_target, int last_target,
                                       int control) {
    if (first_target > last_target)
      throw DomainError("empty target range");
    check_qubit(first_target);
    check_qubit(last_target);
    if (control >= first_target && control <= last_target)
      throw DomainError("control qubit overlaps the target range");
    const std::uint64_t cmask = bit_mask(control);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int t = first_target; t <= last_target; ++t) {
      const std::uint64_t tmask = bit_mask(t);
      for (std::uint64_t i = 0; i < dim(); ++i) {
        if (!(i & cmask) || (i & tmask)) continue;
        const std::uint64_t j = i | tmask;
        const double a = amps_[i], b = amps_[j];
        amps_[i] = (a + b) * inv_sqrt2;
        amps_[j] = (a - b) * inv_sqrt2;
      }
    }
  }

  // Phase oracle over the main register (the top `oracle.arity()` bits).
  // Uncontrolled: every label picks up f(x). Controlled: the control must
  // be the ancilla (qubit n+1, the LSB) and only ancilla-1 labels fire.
  // Always spends exactly one query, whether or not any amplitude changes.
  void apply_phase_oracle(const PhaseOracle& oracle,
                          std::optional<int> control = std::nullopt) {
    const int n = oracle.arity();
    if (control.has_value()) {
      if (num_qubits_ != n + 1)
        throw DomainError("controlled oracle needs an n+1 qubit register");
      if (*control != num_qubits_)
        throw DomainError("oracle control must be the ancilla qubit");
      oracle.record_query();
      for (std::uint64_t i = 1; i < dim(); i += 2)
        if (oracle.sign_at(i >> 1) < 0) amps_[i] = -amps_[i];
    } else {
      if (num_qubits_ < n)
        throw DomainError("register narrower than the oracle");
      const int shift = num_qubits_ - n;
      oracle.record_query();
      for (std::uint64_t i = 0; i < dim(); ++i)
        if (oracle.sign_at(i >> shift) < 0) amps_[i] = -amps_[i];
    }
  }

  // Plane rotation in span{|a>, |b>}:
  //   amps[a] <-  cos(t)*amps[a] + sin(t)*amps[b]
  //   amps[b] <- -sin(t)*amps[a] + cos(t)*amps[b]
  void apply_givens(std::uint64_t label_a, std::uint64_t label_b,
                    double angle) {
    if (label_a == label_b) throw DomainError("givens needs two distinct labels");
    if (label_a >= dim() || label_b >= dim())
      throw DomainError("givens label out of range");
    const double c = std::cos(angle), s = std::sin(angle);
    const double a = amps_[label_a], b = amps_[label_b];
    amps_[label_a] = c * a + s * b;
    amps_[label_b] = -s * a + c * b;
  }

  // One projective measurement in the computational basis. The state is not
  // mutated: copy accounting is the caller's job (a classical simulator
  // cannot enforce no-cloning, so the ledger owns that bookkeeping).
  std::uint64_t sample_measurement(RandomSource& rng) const {
    if (std::abs(norm_squared() - 1.0) > kNormTolerance)
      throw DomainError("cannot sample an unnormalized state");
    const double u = rng.next_double();
    double cum = 0.0;
    std::uint64_t last_nonzero = 0;
    for (std::uint64_t i = 0; i < dim(); ++i) {
      const double p = amps_[i] * amps_[i];
      if (p > 0.0) last_nonzero = i;
      cum += p;
      if (u < cum) return i;
    }
    return last_nonzero;  // u landed in the rounding slack at the top
  }

 private:
  void check_qubit(int qubit) const {
    if (qubit < 1 || qubit > num_qubits_)
      throw DomainError("qubit index " + std::to_string(qubit) +
                        " outside 1.." + std::to_string(num_qubits_));
  }

  // Qubit 1 is the MSB, qubit q the LSB.
  std::uint64_t bit_mask(int qubit) const {
    check_qubit(qubit);
    return std::uint64_t{1} << (num_qubits_ - qubit);
  }

  int num_qubits_;
  std::vector<double> amps_;
};

}  // namespace signsearch
