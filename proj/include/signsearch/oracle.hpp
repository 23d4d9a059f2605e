#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "signsearch/errors.hpp"

namespace signsearch {

// Largest register the brute-force diagnostics will enumerate.
inline constexpr int kMaxEnumerationQubits = 24;

// Phase oracle O_f over n-bit labels: f(x) is +1 or -1, applied as a sign
// on the amplitude of |x>. The query counter counts oracle *invocations*
// (one gate application = one query, regardless of superposition width),
// not per-label evaluations.
class PhaseOracle {
 public:
  using EvalFn = std::function<int(std::uint64_t)>;

  PhaseOracle(int arity, EvalFn eval) : arity_(arity), eval_(std::move(eval)) {
    if (arity_ < 1 || arity_ > 63) throw DomainError("oracle arity out of range");
    if (!eval_) throw DomainError("oracle has no predicate");
  }

  PhaseOracle(PhaseOracle&& other) noexcept
      : arity_(other.arity_),
        eval_(std::move(other.eval_)),
        calls_(other.calls_.load()) {}
  PhaseOracle(const PhaseOracle&) = delete;
  PhaseOracle& operator=(const PhaseOracle&) = delete;

  int arity() const { return arity_; }

  // Sign of f at one label; does not touch the query counter.
  int sign_at(std::uint64_t label) const { return eval_(label); }

  // Called once per gate application by StateVector::apply_phase_oracle.
  void record_query() const { calls_.fetch_add(1, std::memory_order_relaxed); }

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  int arity_;
  EvalFn eval_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

// Oracle marking exactly one state: f(x) = -1 iff x == m.
inline PhaseOracle marked_oracle(int n, std::uint64_t m) {
  if (n < 1 || n > 63) throw DomainError("register width out of range");
  if (m >> n) throw DomainError("marked label " + std::to_string(m) +
                                " does not fit in " + std::to_string(n) + " bits");
  return PhaseOracle(n, [m](std::uint64_t x) { return x == m ? -1 : 1; });
}

// Number of labels the oracle marks. Diagnostic only: enumerates all 2^n
// labels through the uncounted path so that validation never pollutes the
// query ledger.
inline std::uint64_t marked_count(const PhaseOracle& oracle) {
  if (oracle.arity() > kMaxEnumerationQubits)
    throw CapacityError("marked_count enumerates at most 2^" +
                        std::to_string(kMaxEnumerationQubits) + " labels");
  const std::uint64_t n_labels = std::uint64_t{1} << oracle.arity();
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < n_labels; ++x)
    if (oracle.sign_at(x) < 0) ++count;
  return count;
}

// Oracle-call and copy-consumption accounting for one reduction run.
// Counters only grow; `k` is the copies-per-sign-query parameter so that
// reports can display the k*n total explicitly.
struct QueryLedger {
  explicit QueryLedger(int copies_per_query = 1) : k(copies_per_query) {
    if (k < 1) throw DomainError("k must be at least 1");
  }

  QueryLedger(const QueryLedger& other)
      : k(other.k),
        oracle_calls(other.oracle_calls.load()),
        copies_consumed(other.copies_consumed.load()) {}

  void note_oracle_call() { oracle_calls.fetch_add(1, std::memory_order_relaxed); }
  void note_copy() { copies_consumed.fetch_add(1, std::memory_order_relaxed); }

  int k;
  std::atomic<std::uint64_t> oracle_calls{0};
  std::atomic<std::uint64_t> copies_consumed{0};
};

}  // namespace signsearch
