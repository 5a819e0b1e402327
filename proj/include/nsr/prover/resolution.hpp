#pragma once

#include <vector>

#include "nsr/prover/clause.hpp"
#include "nsr/prover/limits.hpp"

namespace nsr::prover {

// Given-clause binary resolution with factoring, forward subsumption and
// unit preference. Deterministic: identical input and limits produce an
// identical status and clauses_generated count. Exhaustion is only reported
// as Saturated when nothing was discarded by the depth limit, so Saturated
// really means the search space was closed under inference.
ProofResult refute(const std::vector<Clause>& clauses, const ResourceLimits& limits);

}  // namespace nsr::prover
