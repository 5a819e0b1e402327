#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsr::fol {

enum class TermKind { Constant, Variable };

struct Term {
  TermKind kind;
  std::string name;

  static Term constant(std::string name) { return {TermKind::Constant, std::move(name)}; }
  static Term variable(std::string name) { return {TermKind::Variable, std::move(name)}; }

  bool operator==(const Term& other) const = default;
};

enum class NodeKind { Predicate, Not, And, Or, Implies, Iff, ForAll, Exists };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula tree. Quantifier nodes store the bound variable in
// name() and the body in left(); Not stores its operand in left().
class Formula {
 public:
  static FormulaPtr predicate(std::string name, std::vector<Term> args);
  static FormulaPtr negation(FormulaPtr operand);
  static FormulaPtr conjunction(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr disjunction(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr implication(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr biconditional(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr forall(std::string var, FormulaPtr body);
  static FormulaPtr exists(std::string var, FormulaPtr body);

  NodeKind kind() const { return kind_; }
  // Predicate name, or the bound variable for quantifier nodes.
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }

  bool is_binary() const {
    return kind_ == NodeKind::And || kind_ == NodeKind::Or || kind_ == NodeKind::Implies ||
           kind_ == NodeKind::Iff;
  }
  bool is_quantifier() const { return kind_ == NodeKind::ForAll || kind_ == NodeKind::Exists; }

 private:
  Formula(NodeKind kind, std::string name, std::vector<Term> args, FormulaPtr left,
          FormulaPtr right)
      : kind_(kind),
        name_(std::move(name)),
        args_(std::move(args)),
        left_(std::move(left)),
        right_(std::move(right)) {}

  NodeKind kind_;
  std::string name_;
  std::vector<Term> args_;
  FormulaPtr left_;
  FormulaPtr right_;
};

bool operator==(const Formula& lhs, const Formula& rhs);
inline bool operator!=(const Formula& lhs, const Formula& rhs) { return !(lhs == rhs); }

// Canonical fully parenthesized text; parse_formula(render_formula(f)) == f.
std::string render_formula(const Formula& f);

// Names of Variable terms not bound by an enclosing quantifier.
std::set<std::string> free_variables(const Formula& f);

inline bool is_closed(const Formula& f) { return free_variables(f).empty(); }

struct Signature {
  std::map<std::string, std::size_t> predicates;  // name -> arity
  std::set<std::string> constants;
};

enum class SyntaxErrorKind {
  UnexpectedToken,
  ArityMismatch,
  EmptyPredicate,
  ForbiddenSymbol,
  UnboundVariable,
};

std::string to_string(SyntaxErrorKind kind);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SyntaxErrorKind kind, std::size_t position, const std::string& message);

  SyntaxErrorKind error_kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  SyntaxErrorKind kind_;
  std::size_t position_;
};

// Unified predicate/constant signature over a batch of formulas. Throws
// SyntaxError{ArityMismatch} when one predicate is used at two arities;
// the reported predicate is deterministic under permutation of the input.
Signature collect_signature(const std::vector<FormulaPtr>& formulas);

// Non-fatal style warnings (predicate names longer than 40 characters).
std::vector<std::string> lint_signature(const Signature& sig);

// Multi-line tree dump for the parse command.
std::string describe_formula(const Formula& f);

}  // namespace nsr::fol
