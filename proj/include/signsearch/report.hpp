#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "signsearch/reduction.hpp"
#include "signsearch/sign_oracle.hpp"
#include "signsearch/state_vector.hpp"

namespace signsearch {

// Structured record of one search run. Labels appear in both integer and
// bit-string form because the MSB-first/ancilla-LSB label convention is a
// local choice and must be self-evident in output.
struct RunReport {
  int n = 0;
  std::optional<std::uint64_t> m_expected;
  std::uint64_t m_recovered = 0;
  int k = 1;
  std::uint64_t oracle_calls = 0;
  std::uint64_t copies_consumed = 0;
  std::vector<Sign> per_bit_signs;
  std::optional<bool> satisfies;  // CNF runs: recovered label satisfies the formula

  struct Baseline {
    std::uint64_t grover_calls = 0;
    bool success = false;
    std::uint64_t measured = 0;
  };
  std::optional<Baseline> baseline;
};

inline RunReport make_run_report(const ReductionRun& run,
                                 std::optional<std::uint64_t> expected = {}) {
  RunReport report;
  report.n = run.n;
  report.m_expected = expected;
  report.m_recovered = run.recovered;
  report.k = run.ledger.k;
  report.oracle_calls = run.ledger.oracle_calls.load();
  report.copies_consumed = run.ledger.copies_consumed.load();
  report.per_bit_signs = run.per_bit_signs;
  return report;
}

inline nlohmann::json report_to_json(const RunReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  if (report.m_expected) {
    j["m_expected"] = *report.m_expected;
    j["m_expected_bits"] = bit_string(*report.m_expected, report.n);
  }
  j["m_recovered"] = report.m_recovered;
  j["m_recovered_bits"] = bit_string(report.m_recovered, report.n);
  j["k"] = report.k;
  j["oracle_calls"] = report.oracle_calls;
  j["copies_consumed"] = report.copies_consumed;
  nlohmann::json bits = nlohmann::json::array();
  for (std::size_t i = 0; i < report.per_bit_signs.size(); ++i) {
    bits.push_back({{"j", i + 1},
                    {"sign", std::string(1, sign_char(report.per_bit_signs[i]))},
                    {"copies", report.k}});
  }
  j["per_bit"] = bits;
  if (report.satisfies) j["satisfies"] = *report.satisfies;
  if (report.baseline) {
    j["baseline"] = {{"grover_calls", report.baseline->grover_calls},
                     {"success", report.baseline->success},
                     {"measured", report.baseline->measured},
                     {"measured_bits", bit_string(report.baseline->measured, report.n)}};
  }
  return j;
}

}  // namespace signsearch
