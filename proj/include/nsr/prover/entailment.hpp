#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nsr/fol/formula.hpp"
#include "nsr/prover/limits.hpp"
#include "nsr/types.hpp"

namespace nsr::prover {

// Bookkeeping for one classification. proof_of_conclusion refutes
// premises + -conclusion (success means the conclusion is entailed);
// proof_of_negation refutes premises + conclusion. When both succeed the
// premises themselves are contradictory and the flag is set; the label is
// still True because conclusion provability is checked first.
struct EntailmentTrace {
  ProofResult proof_of_conclusion;
  std::optional<ProofResult> proof_of_negation;
  bool inconsistent_premises = false;
  bool resource_exhausted = false;
};

// Three-way entailment: True when premises entail the conclusion, False when
// they entail its negation, Uncertain otherwise (including resource
// exhaustion, which is flagged in the trace rather than raised).
// Throws fol::SyntaxError{ArityMismatch} when the combined signature is
// inconsistent; that is a pipeline error, not a label.
std::pair<Label, EntailmentTrace> classify_entailment(
    const std::vector<fol::FormulaPtr>& premises, const fol::FormulaPtr& conclusion,
    const ResourceLimits& limits = {});

}  // namespace nsr::prover
