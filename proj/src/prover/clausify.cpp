#include "nsr/prover/clausify.hpp"

#include <cassert>
#include <map>
#include <optional>

namespace nsr::prover {

using fol::Formula;
using fol::FormulaPtr;
using fol::NodeKind;

std::string SkolemNamer::fresh() {
  for (;;) {
    std::string candidate = "sk" + std::to_string(next_++);
    if (!reserved_.contains(candidate)) return candidate;
  }
}

void SkolemNamer::reserve_identifiers(const fol::Formula& f) {
  switch (f.kind()) {
    case NodeKind::Predicate:
      reserved_.insert(f.name());
      for (const fol::Term& t : f.args()) reserved_.insert(t.name);
      return;
    case NodeKind::Not:
      reserve_identifiers(*f.left());
      return;
    case NodeKind::ForAll:
    case NodeKind::Exists:
      reserved_.insert(f.name());
      reserve_identifiers(*f.left());
      return;
    default:
      reserve_identifiers(*f.left());
      reserve_identifiers(*f.right());
      return;
  }
}

namespace {

// Negation normal form over the surface tree. Iff duplicates its operands,
// so expansion is budgeted to keep adversarial nests from running away.
class NnfBuilder {
 public:
  explicit NnfBuilder(std::size_t budget) : budget_(budget) {}

  FormulaPtr build(const Formula& f, bool positive) {
    spend();
    switch (f.kind()) {
      case NodeKind::Predicate: {
        FormulaPtr atom = Formula::predicate(f.name(), f.args());
        return positive ? atom : Formula::negation(std::move(atom));
      }
      case NodeKind::Not:
        return build(*f.left(), !positive);
      case NodeKind::And:
        return positive
                   ? Formula::conjunction(build(*f.left(), true), build(*f.right(), true))
                   : Formula::disjunction(build(*f.left(), false), build(*f.right(), false));
      case NodeKind::Or:
        return positive
                   ? Formula::disjunction(build(*f.left(), true), build(*f.right(), true))
                   : Formula::conjunction(build(*f.left(), false), build(*f.right(), false));
      case NodeKind::Implies:
        return positive
                   ? Formula::disjunction(build(*f.left(), false), build(*f.right(), true))
                   : Formula::conjunction(build(*f.left(), true), build(*f.right(), false));
      case NodeKind::Iff:
        if (positive) {
          return Formula::conjunction(
              Formula::disjunction(build(*f.left(), false), build(*f.right(), true)),
              Formula::disjunction(build(*f.right(), false), build(*f.left(), true)));
        }
        return Formula::disjunction(
            Formula::conjunction(build(*f.left(), true), build(*f.right(), false)),
            Formula::conjunction(build(*f.left(), false), build(*f.right(), true)));
      case NodeKind::ForAll:
        return positive ? Formula::forall(f.name(), build(*f.left(), true))
                        : Formula::exists(f.name(), build(*f.left(), false));
      case NodeKind::Exists:
        return positive ? Formula::exists(f.name(), build(*f.left(), true))
                        : Formula::forall(f.name(), build(*f.left(), false));
    }
    throw ResourceLimitError("unreachable connective");
  }

 private:
  void spend() {
    if (budget_ == 0) throw ResourceLimitError("formula expansion exceeded the node budget");
    --budget_;
  }

  std::size_t budget_;
};

// CNF matrix after quantifier elimination.
struct Matrix {
  enum class Kind { Lit, And, Or } kind;
  Literal literal;
  std::vector<Matrix> children;
};

class Skolemizer {
 public:
  explicit Skolemizer(SkolemNamer& namer) : namer_(namer) {}

  Matrix walk(const Formula& f) {
    switch (f.kind()) {
      case NodeKind::Predicate:
        return Matrix{Matrix::Kind::Lit, make_literal(f, true), {}};
      case NodeKind::Not:
        // NNF guarantees the operand is an atom.
        assert(f.left()->kind() == NodeKind::Predicate);
        return Matrix{Matrix::Kind::Lit, make_literal(*f.left(), false), {}};
      case NodeKind::And:
      case NodeKind::Or: {
        Matrix m{f.kind() == NodeKind::And ? Matrix::Kind::And : Matrix::Kind::Or, {}, {}};
        m.children.push_back(walk(*f.left()));
        m.children.push_back(walk(*f.right()));
        return m;
      }
      case NodeKind::ForAll: {
        ClauseTerm var = ClauseTerm::variable("U" + std::to_string(next_var_++));
        auto saved = swap_binding(f.name(), var);
        universals_.push_back(var);
        Matrix m = walk(*f.left());
        universals_.pop_back();
        restore_binding(f.name(), saved);
        return m;
      }
      case NodeKind::Exists: {
        // Skolem term over the universals currently in scope.
        ClauseTerm sk = ClauseTerm::functor(namer_.fresh(), universals_);
        auto saved = swap_binding(f.name(), sk);
        Matrix m = walk(*f.left());
        restore_binding(f.name(), saved);
        return m;
      }
      default:
        assert(false && "unexpected connective after NNF");
        return Matrix{Matrix::Kind::And, {}, {}};
    }
  }

 private:
  Literal make_literal(const Formula& atom, bool positive) {
    Literal lit{positive, atom.name(), {}};
    lit.args.reserve(atom.args().size());
    for (const fol::Term& t : atom.args()) {
      if (t.kind == fol::TermKind::Variable) {
        auto it = bindings_.find(t.name);
        assert(it != bindings_.end() && "clausify requires closed formulas");
        lit.args.push_back(it->second);
      } else {
        lit.args.push_back(ClauseTerm::functor(t.name));
      }
    }
    return lit;
  }

  std::optional<ClauseTerm> swap_binding(const std::string& name, ClauseTerm value) {
    std::optional<ClauseTerm> saved;
    auto it = bindings_.find(name);
    if (it != bindings_.end()) saved = it->second;
    bindings_[name] = std::move(value);
    return saved;
  }

  void restore_binding(const std::string& name, std::optional<ClauseTerm>& saved) {
    if (saved.has_value()) {
      bindings_[name] = *saved;
    } else {
      bindings_.erase(name);
    }
  }

  SkolemNamer& namer_;
  std::map<std::string, ClauseTerm> bindings_;
  std::vector<ClauseTerm> universals_;
  std::size_t next_var_ = 0;
};

using LiteralSets = std::vector<std::vector<Literal>>;

LiteralSets distribute(const Matrix& m, std::size_t max_clauses) {
  switch (m.kind) {
    case Matrix::Kind::Lit:
      return {{m.literal}};
    case Matrix::Kind::And: {
      LiteralSets out;
      for (const Matrix& child : m.children) {
        LiteralSets sub = distribute(child, max_clauses);
        out.insert(out.end(), std::make_move_iterator(sub.begin()),
                   std::make_move_iterator(sub.end()));
        if (out.size() > max_clauses) {
          throw ResourceLimitError("CNF distribution exceeded max_clauses");
        }
      }
      return out;
    }
    case Matrix::Kind::Or: {
      LiteralSets out = {{}};
      for (const Matrix& child : m.children) {
        LiteralSets sub = distribute(child, max_clauses);
        LiteralSets crossed;
        if (out.size() * sub.size() > max_clauses) {
          throw ResourceLimitError("CNF distribution exceeded max_clauses");
        }
        crossed.reserve(out.size() * sub.size());
        for (const auto& lhs : out) {
          for (const auto& rhs : sub) {
            std::vector<Literal> merged = lhs;
            merged.insert(merged.end(), rhs.begin(), rhs.end());
            crossed.push_back(std::move(merged));
          }
        }
        out = std::move(crossed);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::vector<Clause> clausify(const fol::Formula& f, SkolemNamer& skolems,
                             std::size_t max_clauses) {
  NnfBuilder nnf(std::max<std::size_t>(max_clauses * 16, 1u << 16));
  FormulaPtr normal = nnf.build(f, true);

  Skolemizer skolemizer(skolems);
  Matrix matrix = skolemizer.walk(*normal);

  std::vector<Clause> clauses;
  for (std::vector<Literal>& lits : distribute(matrix, max_clauses)) {
    bool tautology = false;
    Clause c = canonicalize(std::move(lits), &tautology);
    if (tautology) continue;
    bool duplicate = false;
    for (const Clause& existing : clauses) {
      if (existing == c) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) clauses.push_back(std::move(c));
  }
  return clauses;
}

}  // namespace nsr::prover
