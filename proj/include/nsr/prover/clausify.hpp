#pragma once

#include <set>
#include <string>
#include <vector>

#include "nsr/fol/formula.hpp"
#include "nsr/prover/clause.hpp"
#include "nsr/prover/limits.hpp"

namespace nsr::prover {

// Emits sk0, sk1, ... skipping every reserved identifier, so Skolem symbols
// can never collide with source predicates, constants or variables. One
// namer is shared across all formulas of an instance.
class SkolemNamer {
 public:
  explicit SkolemNamer(std::set<std::string> reserved = {})
      : reserved_(std::move(reserved)) {}

  std::string fresh();

  // Collects every identifier of the formula into the reserved set.
  void reserve_identifiers(const fol::Formula& f);

 private:
  std::set<std::string> reserved_;
  std::size_t next_ = 0;
};

// NNF -> Skolemization -> distribution to CNF. The clause set is
// equisatisfiable with the (closed) input formula. Throws ResourceLimitError
// when distribution would exceed max_clauses.
std::vector<Clause> clausify(const fol::Formula& f, SkolemNamer& skolems,
                             std::size_t max_clauses);

}  // namespace nsr::prover
