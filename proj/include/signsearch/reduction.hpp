#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "signsearch/errors.hpp"
#include "signsearch/oracle.hpp"
#include "signsearch/random.hpp"
#include "signsearch/sign_oracle.hpp"
#include "signsearch/state_vector.hpp"

namespace signsearch {

// Basis label the bit readout queries: |0...0>|1>, ancilla set, main
// register clear. Integer value 1 under the ancilla-is-LSB convention.
inline constexpr std::uint64_t kReadoutLabel = 1;

// Builds the flagged uniform superposition over n+1 qubits: amplitude
// 1/sqrt(N) on |x>|0> for every x != m and 1/sqrt(N) on |m>|1>. Circuit:
// H on all qubits, the phase oracle controlled on the ancilla, H on the
// ancilla again. Costs exactly one oracle query.
inline StateVector prepare_phi0(const PhaseOracle& oracle, QueryLedger& ledger) {
  const int n = oracle.arity();
  StateVector state(n + 1, 0);
  for (int q = 1; q <= n + 1; ++q) state.apply_hadamard(q);
  state.apply_phase_oracle(oracle, n + 1);
  ledger.note_oracle_call();
  state.apply_hadamard(n + 1);
  return state;
}

// Readout circuit for bit j: CZ between qubit j and the ancilla, then the
// ancilla-controlled Hadamard block over the main register. The amplitude
// at kReadoutLabel lands on (-1)^{m_j} / sqrt(N).
inline StateVector prepare_readout_state(const PhaseOracle& oracle, int j,
                                         QueryLedger& ledger) {
  const int n = oracle.arity();
  if (j < 1 || j > n)
    throw DomainError("bit index " + std::to_string(j) + " outside 1.." +
                      std::to_string(n));
  StateVector state = prepare_phi0(oracle, ledger);
  state.apply_cz(j, n + 1);
  state.apply_controlled_hadamard_block(1, n, n + 1);
  return state;
}

// Reads bit m_j of the marked state: prepares k fresh copies of the
// readout state (k oracle queries, k copies consumed) and asks the sign
// oracle for the sign at kReadoutLabel. Plus -> 0, Minus -> 1. A zero
// amplitude there means the oracle was not uniquely marked.
inline int read_bit(const PhaseOracle& oracle, int j, const SignOracle& sign,
                    int k, QueryLedger& ledger) {
  if (k < 1) throw DomainError("k must be at least 1");
  std::vector<StateVector> copies;
  copies.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    copies.push_back(prepare_readout_state(oracle, j, ledger));
    ledger.note_copy();
  }
  try {
    const SignQueryResult r = sign.query(copies, kReadoutLabel);
    return r.sign == Sign::Minus ? 1 : 0;
  } catch (const ZeroAmplitudeError& e) {
    throw MalformedOracleError(
        std::string("readout amplitude vanished; the oracle is not uniquely "
                    "marked (") +
        e.what() + ")");
  }
}

struct ReductionRun {
  int n = 0;
  std::uint64_t recovered = 0;
  QueryLedger ledger{1};
  std::vector<Sign> per_bit_signs;  // bit j is 0 on Plus, 1 on Minus
};

// Recovers the whole marked label bit by bit: n sign queries, k copies
// each, k*n oracle calls total.
inline ReductionRun recover_marked_state(const PhaseOracle& oracle, int n,
                                         const SignOracle& sign, int k = 1) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (n != oracle.arity())
    throw DomainError("width does not match the oracle arity");
  ReductionRun run;
  run.n = n;
  run.ledger = QueryLedger(k);
  run.per_bit_signs.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int bit = read_bit(oracle, j, sign, k, run.ledger);
    run.per_bit_signs.push_back(bit ? Sign::Minus : Sign::Plus);
    if (bit) run.recovered |= std::uint64_t{1} << (n - j);
  }
  const std::uint64_t expected_calls =
      static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n);
  if (run.ledger.oracle_calls.load() != expected_calls)
    throw Error("query accounting mismatch: " +
                std::to_string(run.ledger.oracle_calls.load()) + " calls, expected " +
                std::to_string(expected_calls));
  return run;
}

// floor(pi/4 * sqrt(2^n)): the standard near-optimal schedule for a single
// marked item.
inline std::uint64_t grover_iterations(int n) {
  const double root_dim = std::exp2(0.5 * n);
  return static_cast<std::uint64_t>(std::floor(std::atan(1.0) * root_dim));
}

namespace detail {

// Runs the full amplitude-amplification schedule and leaves the state just
// before measurement.
inline StateVector grover_evolve(const PhaseOracle& oracle, int n) {
  if (n < 2) throw DomainError("grover baseline needs n >= 2");
  if (n != oracle.arity())
    throw DomainError("width does not match the oracle arity");
  StateVector state(n, 0);
  for (int q = 1; q <= n; ++q) state.apply_hadamard(q);
  const std::uint64_t iterations = grover_iterations(n);
  for (std::uint64_t it = 0; it < iterations; ++it) {
    state.apply_phase_oracle(oracle);
    // Diffusion: reflect about the uniform state, H^n (2|0><0| - I) H^n.
    for (int q = 1; q <= n; ++q) state.apply_hadamard(q);
    auto& amps = state.mutable_amps();
    for (std::uint64_t x = 1; x < state.dim(); ++x) amps[x] = -amps[x];
    for (int q = 1; q <= n; ++q) state.apply_hadamard(q);
  }
  return state;
}

}  // namespace detail

struct GroverResult {
  std::uint64_t measured = 0;
  std::uint64_t oracle_calls = 0;
};

// Baseline search: floor(pi/4 * sqrt(N)) oracle+diffusion rounds from the
// uniform state, then a single measurement. Success is probabilistic and
// reported by the caller, never guaranteed.
inline GroverResult grover_search(const PhaseOracle& oracle, int n,
                                  RandomSource& rng) {
  const StateVector state = detail::grover_evolve(oracle, n);
  return {state.sample_measurement(rng), grover_iterations(n)};
}

// Probability that the terminal measurement would land on a marked label,
// computed from the evolved state instead of sampling. Reads the oracle
// through the uncounted diagnostic path.
inline double grover_success_probability(const PhaseOracle& oracle, int n) {
  const StateVector state = detail::grover_evolve(oracle, n);
  double p = 0.0;
  for (std::uint64_t x = 0; x < state.dim(); ++x)
    if (oracle.sign_at(x) < 0) p += state.amplitude(x) * state.amplitude(x);
  return p;
}

}  // namespace signsearch
