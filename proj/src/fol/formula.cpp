#include "nsr/fol/formula.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace nsr::fol {

// Factories keep the constructor private so every node is built validated.
FormulaPtr Formula::predicate(std::string name, std::vector<Term> args) {
  assert(!args.empty());
  return FormulaPtr(new Formula(NodeKind::Predicate, std::move(name), std::move(args), nullptr,
                                nullptr));
}

FormulaPtr Formula::negation(FormulaPtr operand) {
  return FormulaPtr(new Formula(NodeKind::Not, "", {}, std::move(operand), nullptr));
}

FormulaPtr Formula::conjunction(FormulaPtr lhs, FormulaPtr rhs) {
  return FormulaPtr(new Formula(NodeKind::And, "", {}, std::move(lhs), std::move(rhs)));
}

FormulaPtr Formula::disjunction(FormulaPtr lhs, FormulaPtr rhs) {
  return FormulaPtr(new Formula(NodeKind::Or, "", {}, std::move(lhs), std::move(rhs)));
}

FormulaPtr Formula::implication(FormulaPtr lhs, FormulaPtr rhs) {
  return FormulaPtr(new Formula(NodeKind::Implies, "", {}, std::move(lhs), std::move(rhs)));
}

FormulaPtr Formula::biconditional(FormulaPtr lhs, FormulaPtr rhs) {
  return FormulaPtr(new Formula(NodeKind::Iff, "", {}, std::move(lhs), std::move(rhs)));
}

FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
  return FormulaPtr(new Formula(NodeKind::ForAll, std::move(var), {}, std::move(body), nullptr));
}

FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
  return FormulaPtr(new Formula(NodeKind::Exists, std::move(var), {}, std::move(body), nullptr));
}

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.kind() != rhs.kind() || lhs.name() != rhs.name() || lhs.args() != rhs.args()) {
    return false;
  }
  if (static_cast<bool>(lhs.left()) != static_cast<bool>(rhs.left()) ||
      static_cast<bool>(lhs.right()) != static_cast<bool>(rhs.right())) {
    return false;
  }
  if (lhs.left() && !(*lhs.left() == *rhs.left())) return false;
  if (lhs.right() && !(*lhs.right() == *rhs.right())) return false;
  return true;
}

namespace {

const char* connective_token(NodeKind kind) {
  switch (kind) {
    case NodeKind::And: return "&";
    case NodeKind::Or: return "|";
    case NodeKind::Implies: return "->";
    case NodeKind::Iff: return "<->";
    default: return "";
  }
}

enum class RenderCtx { Top, QuantifierBody, Operand };

// Quantifiers are wrapped in parentheses whenever they appear as an operand
// of a connective or under a negation: a bare quantifier body extends to the
// end of the expression, so the parentheses are what keeps reparsing exact.
void render(const Formula& f, RenderCtx ctx, std::string& out) {
  switch (f.kind()) {
    case NodeKind::Predicate: {
      out += f.name();
      out += '(';
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i > 0) out += ',';
        out += f.args()[i].name;
      }
      out += ')';
      return;
    }
    case NodeKind::Not: {
      out += '-';
      render(*f.left(), RenderCtx::Operand, out);
      return;
    }
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Implies:
    case NodeKind::Iff: {
      out += '(';
      render(*f.left(), RenderCtx::Operand, out);
      out += ' ';
      out += connective_token(f.kind());
      out += ' ';
      render(*f.right(), RenderCtx::Operand, out);
      out += ')';
      return;
    }
    case NodeKind::ForAll:
    case NodeKind::Exists: {
      const bool wrap = ctx == RenderCtx::Operand;
      if (wrap) out += '(';
      out += f.kind() == NodeKind::ForAll ? "all " : "exists ";
      out += f.name();
      out += ". ";
      render(*f.left(), RenderCtx::QuantifierBody, out);
      if (wrap) out += ')';
      return;
    }
  }
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case NodeKind::Predicate:
      for (const Term& t : f.args()) {
        if (t.kind == TermKind::Variable &&
            std::find(bound.begin(), bound.end(), t.name) == bound.end()) {
          out.insert(t.name);
        }
      }
      return;
    case NodeKind::Not:
      collect_free(*f.left(), bound, out);
      return;
    case NodeKind::ForAll:
    case NodeKind::Exists:
      bound.push_back(f.name());
      collect_free(*f.left(), bound, out);
      bound.pop_back();
      return;
    default:
      collect_free(*f.left(), bound, out);
      collect_free(*f.right(), bound, out);
      return;
  }
}

void collect_symbols(const Formula& f, std::map<std::string, std::vector<std::size_t>>& arities,
                     std::set<std::string>& constants) {
  switch (f.kind()) {
    case NodeKind::Predicate: {
      auto& seen = arities[f.name()];
      if (std::find(seen.begin(), seen.end(), f.args().size()) == seen.end()) {
        seen.push_back(f.args().size());
      }
      for (const Term& t : f.args()) {
        if (t.kind == TermKind::Constant) constants.insert(t.name);
      }
      return;
    }
    case NodeKind::Not:
    case NodeKind::ForAll:
    case NodeKind::Exists:
      collect_symbols(*f.left(), arities, constants);
      return;
    default:
      collect_symbols(*f.left(), arities, constants);
      collect_symbols(*f.right(), arities, constants);
      return;
  }
}

void describe(const Formula& f, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  switch (f.kind()) {
    case NodeKind::Predicate: {
      out += "Predicate " + f.name() + "(";
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i > 0) out += ", ";
        out += f.args()[i].name;
        out += f.args()[i].kind == TermKind::Variable ? ":var" : ":const";
      }
      out += ")\n";
      return;
    }
    case NodeKind::Not: out += "Not\n"; break;
    case NodeKind::And: out += "And\n"; break;
    case NodeKind::Or: out += "Or\n"; break;
    case NodeKind::Implies: out += "Implies\n"; break;
    case NodeKind::Iff: out += "Iff\n"; break;
    case NodeKind::ForAll: out += "ForAll " + f.name() + "\n"; break;
    case NodeKind::Exists: out += "Exists " + f.name() + "\n"; break;
  }
  if (f.left()) describe(*f.left(), depth + 1, out);
  if (f.right()) describe(*f.right(), depth + 1, out);
}

}  // namespace

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, RenderCtx::Top, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

std::string to_string(SyntaxErrorKind kind) {
  switch (kind) {
    case SyntaxErrorKind::UnexpectedToken: return "UnexpectedToken";
    case SyntaxErrorKind::ArityMismatch: return "ArityMismatch";
    case SyntaxErrorKind::EmptyPredicate: return "EmptyPredicate";
    case SyntaxErrorKind::ForbiddenSymbol: return "ForbiddenSymbol";
    case SyntaxErrorKind::UnboundVariable: return "UnboundVariable";
  }
  return "UnexpectedToken";
}

SyntaxError::SyntaxError(SyntaxErrorKind kind, std::size_t position, const std::string& message)
    : std::runtime_error(to_string(kind) + " at offset " + std::to_string(position) + ": " +
                         message),
      kind_(kind),
      position_(position) {}

Signature collect_signature(const std::vector<FormulaPtr>& formulas) {
  std::map<std::string, std::vector<std::size_t>> arities;
  Signature sig;
  for (const FormulaPtr& f : formulas) {
    collect_symbols(*f, arities, sig.constants);
  }
  // Scan in name order so the reported conflict does not depend on the
  // order the formulas arrived in.
  for (const auto& [name, seen] : arities) {
    if (seen.size() > 1) {
      std::ostringstream msg;
      msg << "predicate " << name << " used with arity " << seen[0] << " vs " << seen[1];
      throw SyntaxError(SyntaxErrorKind::ArityMismatch, 0, msg.str());
    }
    sig.predicates[name] = seen.front();
  }
  return sig;
}

std::vector<std::string> lint_signature(const Signature& sig) {
  constexpr std::size_t kMaxPredicateLength = 40;
  std::vector<std::string> warnings;
  for (const auto& [name, arity] : sig.predicates) {
    (void)arity;
    if (name.size() > kMaxPredicateLength) {
      warnings.push_back("predicate name '" + name + "' is longer than " +
                         std::to_string(kMaxPredicateLength) + " characters");
    }
  }
  return warnings;
}

std::string describe_formula(const Formula& f) {
  std::string out;
  describe(f, 0, out);
  return out;
}

}  // namespace nsr::fol
