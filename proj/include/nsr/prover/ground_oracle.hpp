#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nsr/fol/formula.hpp"
#include "nsr/prover/limits.hpp"

namespace nsr::prover {

struct OracleOptions {
  std::size_t max_domain = 2;
  std::uint64_t max_assignments = 1ull << 24;
};

// A finite interpretation: constants map to domain elements, predicates to
// sets of element tuples.
struct OracleModel {
  std::size_t domain_size = 0;
  std::map<std::string, std::size_t> constants;
  std::map<std::string, std::set<std::vector<std::size_t>>> relations;

  bool holds(const std::string& predicate, const std::vector<std::size_t>& tuple) const;
  std::string to_string() const;
};

enum class OracleKind { True, False, Uncertain, Undecided };

std::string to_string(OracleKind kind);

// Result of exhaustive finite-model search. True/False/Uncertain follow the
// entailment reading over every model of the premises found within the
// domain bound. Undecided means no model of the premises exists within the
// bound, which is inconclusive in general; unsat_definitive is set when the
// instance is quantifier-free and an injective constant assignment was in
// range, making the unsatisfiability propositional and final.
struct OracleResult {
  OracleKind kind = OracleKind::Undecided;
  bool premises_unsatisfiable = false;
  bool unsat_definitive = false;
  std::uint64_t assignments_checked = 0;
  std::optional<OracleModel> witness_conclusion_true;
  std::optional<OracleModel> witness_conclusion_false;

  std::optional<Label> to_label() const;
};

// Brute-force oracle for differential testing: enumerates every
// interpretation over domains of size 1..max_domain. Throws
// ResourceLimitError when the assignment count exceeds max_assignments.
OracleResult ground_oracle(const std::vector<fol::FormulaPtr>& premises,
                           const fol::FormulaPtr& conclusion,
                           const OracleOptions& options = {});

}  // namespace nsr::prover
