#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace nsr::prover {

// Term over clause space: a variable or a functor application, where
// constants are nullary functors. Non-nullary functors only arise from
// Skolemization; the surface dialect has no function symbols.
struct ClauseTerm {
  bool is_variable = false;
  std::string name;
  std::vector<ClauseTerm> args;

  static ClauseTerm variable(std::string name) { return {true, std::move(name), {}}; }
  static ClauseTerm functor(std::string name, std::vector<ClauseTerm> args = {}) {
    return {false, std::move(name), std::move(args)};
  }

  bool operator==(const ClauseTerm& other) const = default;
};

bool term_less(const ClauseTerm& lhs, const ClauseTerm& rhs);
std::size_t term_depth(const ClauseTerm& t);
std::size_t term_size(const ClauseTerm& t);
std::string to_string(const ClauseTerm& t);

struct Literal {
  bool positive = true;
  std::string predicate;
  std::vector<ClauseTerm> args;

  bool operator==(const Literal& other) const = default;
  bool complements(const Literal& other) const {
    return positive != other.positive && predicate == other.predicate &&
           args.size() == other.args.size();
  }
};

bool literal_less(const Literal& lhs, const Literal& rhs);
std::string to_string(const Literal& l);

// A disjunction of literals with implicitly universally quantified variables.
// Kept canonical: literals sorted and deduplicated, variables renamed V0,V1,..
// in order of first occurrence. The empty clause is the contradiction.
struct Clause {
  std::vector<Literal> literals;

  bool empty() const { return literals.empty(); }
  std::size_t weight() const;         // total symbol count
  std::size_t max_literal_depth() const;
  bool operator==(const Clause& other) const = default;
};

bool clause_less(const Clause& lhs, const Clause& rhs);
std::string to_string(const Clause& c);

// Sorts, deduplicates and renames variables; sets `tautology` when the
// clause contains a complementary pair of identical literals.
Clause canonicalize(std::vector<Literal> literals, bool* tautology = nullptr);

// Substitutions bind variable names to terms; bindings may chain.
using Substitution = std::map<std::string, ClauseTerm>;

ClauseTerm apply_substitution(const ClauseTerm& t, const Substitution& subst);
Literal apply_substitution(const Literal& l, const Substitution& subst);

// Most general unifier with occurs check; extends `subst` in place and
// returns false (leaving subst in an undefined state) when none exists.
bool unify(const ClauseTerm& lhs, const ClauseTerm& rhs, Substitution& subst);
bool unify_args(const std::vector<ClauseTerm>& lhs, const std::vector<ClauseTerm>& rhs,
                Substitution& subst);

// One-way matching: binds variables of `pattern` only.
bool match(const ClauseTerm& pattern, const ClauseTerm& target, Substitution& subst);

// theta-subsumption: some substitution maps `general` into a subset of
// `specific`. Used for forward subsumption.
bool subsumes(const Clause& general, const Clause& specific);

// Renames every variable by prefixing, keeping two clauses apart.
Clause rename_variables(const Clause& c, const std::string& prefix);

}  // namespace nsr::prover
