#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "signsearch/errors.hpp"
#include "signsearch/oracle.hpp"
#include "signsearch/random.hpp"

namespace signsearch {

// Variable indices are 1-based. An assignment is packed into an integer
// label with variable 1 as the most significant bit, mirroring the
// qubit-1-is-MSB register convention, so CNF variables, oracle labels and
// report bit strings all read the same way.
struct Literal {
  int variable;
  bool negated;

  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  bool operator==(const CnfFormula&) const = default;
};

struct ParseOptions {
  // Strict mode rejects clauses wider than three literals and tautological
  // clauses (a variable together with its own negation). When off, wide
  // clauses pass and tautologies only produce warnings.
  bool strict_3sat = true;
};

namespace detail {

inline bool assignment_bit(std::uint64_t assignment, int num_vars, int variable) {
  return (assignment >> (num_vars - variable)) & 1;
}

inline bool literal_true(const Literal& lit, std::uint64_t assignment, int num_vars) {
  return assignment_bit(assignment, num_vars, lit.variable) != lit.negated;
}

// Scanner state for the DIMACS reader. Tracks the 1-based line so errors
// can point at their source.
struct DimacsScanner {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') ++line;
    ++pos;
  }

  // Skips whitespace and comment lines ('c' at a token boundary runs to
  // end of line, the conventional reading).
  void skip_filler() {
    while (!at_end()) {
      const char ch = peek();
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\f' ||
          ch == '\v') {
        advance();
      } else if (ch == 'c') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  // Reads one signed integer token. Anything else is a parse error.
  long long next_int(const char* what) {
    skip_filler();
    if (at_end()) throw ParseError(std::string("expected ") + what + ", got end of input", line);
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
    }
    if (at_end() || peek() < '0' || peek() > '9')
      throw ParseError(std::string("expected ") + what, line);
    long long value = 0;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
      value = value * 10 + (peek() - '0');
      if (value > (1ll << 32)) throw ParseError(std::string(what) + " overflows", line);
      advance();
    }
    if (!at_end()) {
      const char ch = peek();
      const bool boundary = ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' ||
                            ch == '\f' || ch == '\v';
      if (!boundary) throw ParseError(std::string("malformed ") + what, line);
    }
    return negative ? -value : value;
  }
};

}  // namespace detail

// Reads DIMACS CNF: 'c' comment lines, one 'p cnf <vars> <clauses>' header,
// then zero-terminated clauses (free-form whitespace, clauses may span
// lines). Declared counts must match the actual ones. Errors carry the
// offending line; for an unterminated clause that is the line the clause
// started on. Strict-mode violations throw Strict3SatError, every other
// defect a plain ParseError, and nothing escapes as a crash regardless of
// the input bytes.
inline CnfFormula parse_dimacs(std::string_view text,
                               const ParseOptions& options = {},
                               std::vector<std::string>* warnings = nullptr) {
  detail::DimacsScanner in{text};

  in.skip_filler();
  if (in.at_end()) throw ParseError("missing 'p cnf' header", in.line);
  if (in.peek() != 'p') throw ParseError("expected 'p cnf' header", in.line);
  in.advance();
  for (char expected : {' ', 'c', 'n', 'f'}) {
    // Tolerate any run of blanks between 'p' and 'cnf'.
    if (expected == ' ') {
      bool saw_blank = false;
      while (!in.at_end() && (in.peek() == ' ' || in.peek() == '\t')) {
        saw_blank = true;
        in.advance();
      }
      if (!saw_blank) throw ParseError("malformed header", in.line);
      continue;
    }
    if (in.at_end() || in.peek() != expected)
      throw ParseError("malformed header, expected 'p cnf'", in.line);
    in.advance();
  }

  const long long declared_vars = in.next_int("variable count");
  const long long declared_clauses = in.next_int("clause count");
  if (declared_vars < 0 || declared_vars > 100000000)
    throw ParseError("variable count out of range", in.line);
  if (declared_clauses < 0 || declared_clauses > 100000000)
    throw ParseError("clause count out of range", in.line);

  CnfFormula formula;
  formula.num_vars = static_cast<int>(declared_vars);

  while (true) {
    in.skip_filler();
    if (in.at_end()) break;
    if (in.peek() == 'p') throw ParseError("duplicate header", in.line);
    if (static_cast<long long>(formula.clauses.size()) == declared_clauses)
      throw ParseError("more clauses than the header declares", in.line);

    const int clause_line = in.line;
    Clause clause;
    while (true) {
      if (in.at_end())
        throw ParseError("clause missing its terminating 0", clause_line);
      const long long lit = in.next_int("literal");
      if (lit == 0) break;
      const long long var = lit < 0 ? -lit : lit;
      if (var > declared_vars)
        throw ParseError("literal " + std::to_string(lit) +
                             " exceeds the declared variable count",
                         in.line);
      clause.push_back(Literal{static_cast<int>(var), lit < 0});
      in.skip_filler();
    }
    if (clause.empty()) throw ParseError("empty clause", clause_line);

    if (options.strict_3sat && clause.size() > 3)
      throw Strict3SatError("clause has " + std::to_string(clause.size()) +
                                " literals; strict 3-SAT allows at most 3",
                            clause_line);
    for (std::size_t i = 0; i < clause.size(); ++i) {
      for (std::size_t k = i + 1; k < clause.size(); ++k) {
        if (clause[i].variable == clause[k].variable &&
            clause[i].negated != clause[k].negated) {
          if (options.strict_3sat)
            throw Strict3SatError("tautological clause on variable " +
                                      std::to_string(clause[i].variable),
                                  clause_line);
          if (warnings)
            warnings->push_back("line " + std::to_string(clause_line) +
                                ": tautological clause on variable " +
                                std::to_string(clause[i].variable));
        }
      }
    }
    formula.clauses.push_back(std::move(clause));
  }

  if (static_cast<long long>(formula.clauses.size()) != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " +
                         std::to_string(formula.clauses.size()),
                     in.line);
  return formula;
}

// Canonical DIMACS output; clause and literal order preserved verbatim.
// parse_dimacs(render_dimacs(f)) reproduces f exactly.
inline std::string render_dimacs(const CnfFormula& formula) {
  std::string out = "p cnf " + std::to_string(formula.num_vars) + ' ' +
                    std::to_string(formula.clauses.size()) + '\n';
  for (const Clause& clause : formula.clauses) {
    for (const Literal& lit : clause) {
      if (lit.negated) out += '-';
      out += std::to_string(lit.variable);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

// True iff every clause has at least one satisfied literal.
inline bool evaluate(const CnfFormula& formula, std::uint64_t assignment) {
  if (formula.num_vars < 64 && (assignment >> formula.num_vars))
    throw DomainError("assignment out of range");
  for (const Clause& clause : formula.clauses) {
    bool satisfied = false;
    for (const Literal& lit : clause) {
      if (detail::literal_true(lit, assignment, formula.num_vars)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

// Phase oracle marking the satisfying assignments: f(x) = -1 iff x
// satisfies the formula. Counter-instrumented like any other oracle.
inline PhaseOracle compile_oracle(const CnfFormula& formula) {
  if (formula.num_vars < 1) throw DomainError("formula has no variables");
  auto shared = std::make_shared<const CnfFormula>(formula);
  return PhaseOracle(shared->num_vars, [shared](std::uint64_t x) {
    return evaluate(*shared, x) ? -1 : 1;
  });
}

// All satisfying assignments in ascending label order, at most `cap` of
// them. Enumeration bound matches the diagnostic oracle bound.
inline std::vector<std::uint64_t> brute_force_solutions(const CnfFormula& formula,
                                                        std::uint64_t cap) {
  if (formula.num_vars > kMaxEnumerationQubits)
    throw CapacityError("brute force enumerates at most 2^" +
                        std::to_string(kMaxEnumerationQubits) + " assignments");
  std::vector<std::uint64_t> solutions;
  const std::uint64_t n_labels = std::uint64_t{1} << formula.num_vars;
  for (std::uint64_t x = 0; x < n_labels && solutions.size() < cap; ++x)
    if (evaluate(formula, x)) solutions.push_back(x);
  return solutions;
}

struct UniqueInstance {
  CnfFormula formula;
  std::uint64_t solution;
};

// Generates a strict-3SAT formula with exactly one satisfying assignment:
// plant a random assignment, keep adding random clauses it satisfies until
// the planted assignment is the lone survivor, then confirm by brute
// force. Deterministic for a fixed rng seed.
inline UniqueInstance generate_unique_instance(int n, RandomSource& rng) {
  if (n < 2) throw DomainError("unique instances need at least 2 variables");
  if (n > kMaxEnumerationQubits)
    throw CapacityError("unique-instance generation is brute-force verified");

  const int width = std::min(3, n);
  const std::uint64_t n_labels = std::uint64_t{1} << n;
  constexpr int kRetries = 50;

  for (int attempt = 0; attempt < kRetries; ++attempt) {
    const std::uint64_t planted = rng.next_below(n_labels);
    std::vector<std::uint64_t> survivors(n_labels);
    for (std::uint64_t x = 0; x < n_labels; ++x) survivors[x] = x;

    CnfFormula formula;
    formula.num_vars = n;
    const std::size_t clause_budget = static_cast<std::size_t>(40) * n;

    while (survivors.size() > 1 && formula.clauses.size() < clause_budget) {
      Clause clause;
      while (static_cast<int>(clause.size()) < width) {
        const int var = static_cast<int>(rng.next_below(n)) + 1;
        bool dup = false;
        for (const Literal& lit : clause) dup |= lit.variable == var;
        if (!dup) clause.push_back(Literal{var, (rng.next_u64() & 1) != 0});
      }
      bool planted_satisfied = false;
      for (const Literal& lit : clause)
        planted_satisfied |= detail::literal_true(lit, planted, n);
      if (!planted_satisfied) {
        // Flip one literal so the planted assignment stays satisfying.
        Literal& lit = clause[rng.next_below(clause.size())];
        lit.negated = !detail::assignment_bit(planted, n, lit.variable);
      }

      std::erase_if(survivors, [&](std::uint64_t x) {
        for (const Literal& lit : clause)
          if (detail::literal_true(lit, x, n)) return false;
        return true;
      });
      formula.clauses.push_back(std::move(clause));
    }

    if (survivors.size() != 1) continue;
    const std::vector<std::uint64_t> verified = brute_force_solutions(formula, 2);
    if (verified.size() == 1 && verified.front() == planted)
      return {std::move(formula), planted};
  }
  throw GenerationError("could not build a uniquely satisfiable instance for n = " +
                        std::to_string(n));
}

}  // namespace signsearch
