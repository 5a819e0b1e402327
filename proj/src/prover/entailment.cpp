#include "nsr/prover/entailment.hpp"

#include "nsr/prover/clausify.hpp"
#include "nsr/prover/resolution.hpp"

namespace nsr::prover {

namespace {

// Clausification overflow counts as a ResourceOut attempt, not a failure.
ProofResult attempt(const std::vector<Clause>& base, const fol::Formula& goal,
                    SkolemNamer& skolems, const ResourceLimits& limits) {
  std::vector<Clause> clauses = base;
  try {
    for (Clause& c : clausify(goal, skolems, limits.max_clauses)) {
      clauses.push_back(std::move(c));
    }
  } catch (const ResourceLimitError&) {
    return ProofResult{ProofStatus::ResourceOut, 0, 0.0};
  }
  return refute(clauses, limits);
}

}  // namespace

std::pair<Label, EntailmentTrace> classify_entailment(
    const std::vector<fol::FormulaPtr>& premises, const fol::FormulaPtr& conclusion,
    const ResourceLimits& limits) {
  std::vector<fol::FormulaPtr> all = premises;
  all.push_back(conclusion);
  fol::collect_signature(all);  // throws on arity conflicts

  SkolemNamer skolems;
  for (const fol::FormulaPtr& f : all) skolems.reserve_identifiers(*f);

  EntailmentTrace trace;
  std::vector<Clause> base;
  bool premises_overflowed = false;
  try {
    for (const fol::FormulaPtr& p : premises) {
      for (Clause& c : clausify(*p, skolems, limits.max_clauses)) {
        base.push_back(std::move(c));
      }
    }
  } catch (const ResourceLimitError&) {
    premises_overflowed = true;
  }
  if (premises_overflowed) {
    trace.proof_of_conclusion = ProofResult{ProofStatus::ResourceOut, 0, 0.0};
    trace.proof_of_negation = ProofResult{ProofStatus::ResourceOut, 0, 0.0};
    trace.resource_exhausted = true;
    return {Label::Uncertain, trace};
  }

  trace.proof_of_conclusion =
      attempt(base, *fol::Formula::negation(conclusion), skolems, limits);
  if (trace.proof_of_conclusion.status == ProofStatus::Proved) {
    // Also try refuting premises + conclusion: success there means the
    // premises alone are contradictory.
    trace.proof_of_negation = attempt(base, *conclusion, skolems, limits);
    trace.inconsistent_premises =
        trace.proof_of_negation->status == ProofStatus::Proved;
    return {Label::True, trace};
  }

  trace.proof_of_negation = attempt(base, *conclusion, skolems, limits);
  if (trace.proof_of_negation->status == ProofStatus::Proved) {
    return {Label::False, trace};
  }

  trace.resource_exhausted =
      trace.proof_of_conclusion.status == ProofStatus::ResourceOut ||
      trace.proof_of_negation->status == ProofStatus::ResourceOut;
  return {Label::Uncertain, trace};
}

}  // namespace nsr::prover
