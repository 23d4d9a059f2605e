#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signsearch/errors.hpp"
#include "signsearch/random.hpp"
#include "signsearch/state_vector.hpp"

namespace signsearch {

// Sign of a basis amplitude. Plus corresponds to the estimator answering
// |0> on its first qubit, Minus to |1>; the rest of the post-measurement
// state is irrelevant, so an enum is the whole observable content.
enum class Sign { Plus, Minus };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct SignQueryResult {
  Sign sign;
  std::uint64_t copies_used;  // >= 1
  double confidence;          // in (0, 1]; 1.0 for the omniscient oracle
};

inline constexpr double kDefaultSignEpsilon = 1e-12;

// Idealized sign query: reads the stored amplitude directly. One copy,
// full confidence. Amplitudes inside [-epsilon, epsilon] have no usable
// sign; for reduction inputs that means the unique-marking precondition
// was broken upstream.
inline SignQueryResult omniscient_sign(const StateVector& state,
                                       std::uint64_t target,
                                       double epsilon = kDefaultSignEpsilon) {
  if (epsilon <= 0.0) throw DomainError("epsilon must be positive");
  const double a = state.amplitude(target);
  if (a > epsilon) return {Sign::Plus, 1, 1.0};
  if (a < -epsilon) return {Sign::Minus, 1, 1.0};
  throw ZeroAmplitudeError("amplitude at label " + std::to_string(target) +
                           " is zero within " + std::to_string(epsilon));
}

// Sign query over k independently prepared copies of a state. The caller
// pays for the copies (ledger accounting happens there); implementations
// report how many they actually consumed.
class SignOracle {
 public:
  virtual ~SignOracle() = default;
  virtual SignQueryResult query(std::span<const StateVector> copies,
                                std::uint64_t target) const = 0;
};

class OmniscientSignOracle final : public SignOracle {
 public:
  explicit OmniscientSignOracle(double epsilon = kDefaultSignEpsilon)
      : epsilon_(epsilon) {}

  SignQueryResult query(std::span<const StateVector> copies,
                        std::uint64_t target) const override {
    if (copies.empty()) throw DomainError("sign query needs at least one copy");
    return omniscient_sign(copies.front(), target, epsilon_);
  }

 private:
  double epsilon_;
};

// Measurement-driven sign estimator.
//
// Promise: each prepared copy has amplitude +1/sqrt(N') on `reference` and
// an unknown-sign amplitude on `target`. Each copy is rotated by a Givens
// rotation in span{|reference>, |target>} and measured once:
//   angle -pi/4: amps[target] -> (a_t + a_r)/sqrt(2), hits only if sign is +
//   angle +pi/4: amps[target] -> (a_t - a_r)/sqrt(2), hits only if sign is -
// Copies are consumed in strictly alternating (-pi/4, +pi/4) pairs. After
// each pair, with hit counts (h_plus, h_minus), H = h_plus + h_minus and
// d = |h_plus - h_minus|:
//   - if min(h_plus, h_minus) >= 3, the reference carries no signal (under
//     the promise one arm's hit rate is exactly zero) -> BadReferenceError;
//   - else stop once the Hoeffding bound on an equal-rates fluctuation,
//     2*exp(-d^2 / (2H)), drops to 1 - confidence_goal, and return the
//     majority arm's sign with confidence 1 minus that bound.
// Testing counts rather than rates is what keeps the copy cost Theta(N'):
// the stop fires after a fixed number of hits, and hits arrive at rate
// 2/N' per pair.
inline SignQueryResult sampling_sign(
    const std::function<StateVector()>& prepare, std::uint64_t target,
    std::uint64_t reference, std::uint64_t budget, double confidence_goal,
    RandomSource& rng) {
  if (target == reference) throw DomainError("target equals reference");
  if (budget < 1) throw DomainError("budget must be at least 1");
  if (confidence_goal <= 0.0 || confidence_goal >= 1.0)
    throw DomainError("confidence goal must lie in (0, 1)");

  const double alpha = 1.0 - confidence_goal;
  std::uint64_t used = 0;
  std::uint64_t hits_plus = 0;   // hits under -pi/4, evidence for Plus
  std::uint64_t hits_minus = 0;  // hits under +pi/4, evidence for Minus

  const double quarter_turn = std::atan(1.0);  // pi/4
  auto measure_rotated = [&](double angle) {
    StateVector copy = prepare();
    copy.apply_givens(reference, target, angle);
    ++used;
    return copy.sample_measurement(rng) == target;
  };

  while (used + 2 <= budget) {
    if (measure_rotated(-quarter_turn)) ++hits_plus;
    if (measure_rotated(quarter_turn)) ++hits_minus;

    if (std::min(hits_plus, hits_minus) >= 3)
      throw BadReferenceError(
          "both rotations hit; reference amplitude carries no sign signal");

    const double total = static_cast<double>(hits_plus + hits_minus);
    if (total == 0.0) continue;
    const double diff = static_cast<double>(
        hits_plus > hits_minus ? hits_plus - hits_minus : hits_minus - hits_plus);
    const double fluctuation_bound = 2.0 * std::exp(-diff * diff / (2.0 * total));
    if (fluctuation_bound <= alpha) {
      return {hits_plus > hits_minus ? Sign::Plus : Sign::Minus, used,
              1.0 - fluctuation_bound};
    }
  }
  throw InconclusiveError("budget of " + std::to_string(budget) +
                          " copies exhausted before reaching confidence " +
                          std::to_string(confidence_goal));
}

struct ScalingRow {
  int n;
  std::uint64_t median_copies;
  int trials;
  int censored;
};

// Default copy budget for one sampling trial at register width n. The
// estimator needs ~2*ln(2/alpha) hits at rate 2/N per pair, so 256*N is
// far above the tail even at 99.9% confidence.
inline std::uint64_t default_sampling_budget(int n) {
  return 1024 + (std::uint64_t{256} << n);
}

// Plants random sign patterns in +-1/sqrt(N) states and measures the
// copies sampling_sign needs per width. Censored trials (budget hit) enter
// the median at the budget value and are reported in their own column.
// Per-trial streams are derived from the master seed, so results do not
// depend on execution order. The median is the lower median.
inline std::vector<ScalingRow> scaling_study(
    const std::vector<int>& n_range, double confidence_goal, int trials,
    const RandomSource& rng,
    std::optional<std::uint64_t> budget_override = std::nullopt) {
  if (trials < 0) throw DomainError("negative trial count");
  std::vector<ScalingRow> rows;
  for (int n : n_range) {
    if (n < 1 || n > 16)
      throw CapacityError("scaling study limited to 1..16 qubits");
    if (trials == 0) continue;  // vacuous run: empty table

    const std::uint64_t dim = std::uint64_t{1} << n;
    const double unit = 1.0 / std::sqrt(static_cast<double>(dim));
    const std::uint64_t budget =
        budget_override.value_or(default_sampling_budget(n));

    std::vector<std::uint64_t> copies;
    int censored = 0;
    for (int trial = 0; trial < trials; ++trial) {
      RandomSource trial_rng =
          rng.derive((static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(trial));

      std::vector<double> amps(dim);
      for (std::uint64_t x = 0; x < dim; ++x)
        amps[x] = (trial_rng.next_u64() & 1) ? unit : -unit;
      const std::uint64_t reference = trial_rng.next_below(dim);
      amps[reference] = unit;  // promised positive reference
      std::uint64_t target = trial_rng.next_below(dim);
      while (target == reference) target = trial_rng.next_below(dim);

      auto prepare = [&]() { return StateVector(n, amps); };
      try {
        const SignQueryResult r = sampling_sign(prepare, target, reference,
                                                budget, confidence_goal, trial_rng);
        copies.push_back(r.copies_used);
      } catch (const InconclusiveError&) {
        ++censored;
        copies.push_back(budget);
      }
    }
    std::sort(copies.begin(), copies.end());
    rows.push_back(ScalingRow{n, copies[(copies.size() - 1) / 2], trials, censored});
  }
  return rows;
}

inline std::string scaling_csv(const std::vector<ScalingRow>& rows) {
  std::string out = "n,median_copies,trials,censored\n";
  for (const ScalingRow& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.median_copies) + ',' +
           std::to_string(r.trials) + ',' + std::to_string(r.censored) + '\n';
  }
  return out;
}

// Least-squares slope of log2(median_copies) against n. Needs two distinct
// widths; otherwise there is no slope to report.
inline std::optional<double> fit_log2_slope(const std::vector<ScalingRow>& rows) {
  if (rows.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(rows.size());
  for (const ScalingRow& r : rows) {
    const double x = r.n;
    const double y = std::log2(static_cast<double>(r.median_copies));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (count * sxy - sx * sy) / denom;
}

}  // namespace signsearch
