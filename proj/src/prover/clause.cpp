#include "nsr/prover/clause.hpp"

#include <algorithm>
#include <functional>

namespace nsr::prover {

bool term_less(const ClauseTerm& lhs, const ClauseTerm& rhs) {
  if (lhs.is_variable != rhs.is_variable) return lhs.is_variable;  // variables first
  if (lhs.name != rhs.name) return lhs.name < rhs.name;
  if (lhs.args.size() != rhs.args.size()) return lhs.args.size() < rhs.args.size();
  for (std::size_t i = 0; i < lhs.args.size(); ++i) {
    if (!(lhs.args[i] == rhs.args[i])) return term_less(lhs.args[i], rhs.args[i]);
  }
  return false;
}

std::size_t term_depth(const ClauseTerm& t) {
  std::size_t deepest = 0;
  for (const ClauseTerm& a : t.args) deepest = std::max(deepest, term_depth(a));
  return deepest + 1;
}

std::size_t term_size(const ClauseTerm& t) {
  std::size_t total = 1;
  for (const ClauseTerm& a : t.args) total += term_size(a);
  return total;
}

std::string to_string(const ClauseTerm& t) {
  std::string out = t.name;
  if (!t.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i > 0) out += ',';
      out += to_string(t.args[i]);
    }
    out += ')';
  }
  return out;
}

bool literal_less(const Literal& lhs, const Literal& rhs) {
  if (lhs.predicate != rhs.predicate) return lhs.predicate < rhs.predicate;
  if (lhs.positive != rhs.positive) return !lhs.positive;  // negative first
  if (lhs.args.size() != rhs.args.size()) return lhs.args.size() < rhs.args.size();
  for (std::size_t i = 0; i < lhs.args.size(); ++i) {
    if (!(lhs.args[i] == rhs.args[i])) return term_less(lhs.args[i], rhs.args[i]);
  }
  return false;
}

std::string to_string(const Literal& l) {
  std::string out = l.positive ? "" : "-";
  out += l.predicate;
  out += '(';
  for (std::size_t i = 0; i < l.args.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(l.args[i]);
  }
  out += ')';
  return out;
}

std::size_t Clause::weight() const {
  std::size_t total = 0;
  for (const Literal& l : literals) {
    total += 1;
    for (const ClauseTerm& t : l.args) total += term_size(t);
  }
  return total;
}

std::size_t Clause::max_literal_depth() const {
  std::size_t deepest = 0;
  for (const Literal& l : literals) {
    for (const ClauseTerm& t : l.args) deepest = std::max(deepest, term_depth(t));
  }
  return deepest;
}

bool clause_less(const Clause& lhs, const Clause& rhs) {
  return std::lexicographical_compare(lhs.literals.begin(), lhs.literals.end(),
                                      rhs.literals.begin(), rhs.literals.end(), literal_less);
}

std::string to_string(const Clause& c) {
  if (c.literals.empty()) return "[]";
  std::string out = "{";
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(c.literals[i]);
  }
  out += '}';
  return out;
}

namespace {

void rename_term(const ClauseTerm& t, std::map<std::string, std::string>& names,
                 std::size_t& next, ClauseTerm& out) {
  if (t.is_variable) {
    auto [it, inserted] = names.try_emplace(t.name, "");
    if (inserted) it->second = "V" + std::to_string(next++);
    out = ClauseTerm::variable(it->second);
    return;
  }
  out.is_variable = false;
  out.name = t.name;
  out.args.resize(t.args.size());
  for (std::size_t i = 0; i < t.args.size(); ++i) rename_term(t.args[i], names, next, out.args[i]);
}

}  // namespace

Clause canonicalize(std::vector<Literal> literals, bool* tautology) {
  std::sort(literals.begin(), literals.end(), literal_less);
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  if (tautology != nullptr) {
    *tautology = false;
    for (const Literal& l : literals) {
      if (!l.positive) continue;
      Literal negated = l;
      negated.positive = false;
      if (std::binary_search(literals.begin(), literals.end(), negated, literal_less)) {
        *tautology = true;
        break;
      }
    }
  }
  // Rename variables in order of first occurrence so structurally equal
  // clauses compare equal.
  std::map<std::string, std::string> names;
  std::size_t next = 0;
  for (Literal& l : literals) {
    for (ClauseTerm& t : l.args) {
      ClauseTerm renamed;
      rename_term(t, names, next, renamed);
      t = std::move(renamed);
    }
  }
  // Renaming can perturb the order; sort once more for a stable form.
  std::sort(literals.begin(), literals.end(), literal_less);
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  return Clause{std::move(literals)};
}

namespace {

// Follows variable bindings until a non-variable or unbound variable.
const ClauseTerm* walk(const ClauseTerm* t, const Substitution& subst) {
  while (t->is_variable) {
    auto it = subst.find(t->name);
    if (it == subst.end()) break;
    t = &it->second;
  }
  return t;
}

bool occurs(const std::string& var, const ClauseTerm& t, const Substitution& subst) {
  const ClauseTerm* resolved = walk(&t, subst);
  if (resolved->is_variable) return resolved->name == var;
  for (const ClauseTerm& a : resolved->args) {
    if (occurs(var, a, subst)) return true;
  }
  return false;
}

}  // namespace

ClauseTerm apply_substitution(const ClauseTerm& t, const Substitution& subst) {
  const ClauseTerm* resolved = walk(&t, subst);
  if (resolved->is_variable) return *resolved;
  ClauseTerm out = ClauseTerm::functor(resolved->name);
  out.args.reserve(resolved->args.size());
  for (const ClauseTerm& a : resolved->args) out.args.push_back(apply_substitution(a, subst));
  return out;
}

Literal apply_substitution(const Literal& l, const Substitution& subst) {
  Literal out{l.positive, l.predicate, {}};
  out.args.reserve(l.args.size());
  for (const ClauseTerm& t : l.args) out.args.push_back(apply_substitution(t, subst));
  return out;
}

bool unify(const ClauseTerm& lhs, const ClauseTerm& rhs, Substitution& subst) {
  const ClauseTerm* a = walk(&lhs, subst);
  const ClauseTerm* b = walk(&rhs, subst);
  if (a->is_variable && b->is_variable && a->name == b->name) return true;
  if (a->is_variable) {
    if (occurs(a->name, *b, subst)) return false;
    subst[a->name] = *b;
    return true;
  }
  if (b->is_variable) {
    if (occurs(b->name, *a, subst)) return false;
    subst[b->name] = *a;
    return true;
  }
  if (a->name != b->name || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i) {
    if (!unify(a->args[i], b->args[i], subst)) return false;
  }
  return true;
}

bool unify_args(const std::vector<ClauseTerm>& lhs, const std::vector<ClauseTerm>& rhs,
                Substitution& subst) {
  if (lhs.size() != rhs.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!unify(lhs[i], rhs[i], subst)) return false;
  }
  return true;
}

bool match(const ClauseTerm& pattern, const ClauseTerm& target, Substitution& subst) {
  if (pattern.is_variable) {
    auto it = subst.find(pattern.name);
    if (it != subst.end()) return it->second == target;
    subst[pattern.name] = target;
    return true;
  }
  if (target.is_variable || pattern.name != target.name ||
      pattern.args.size() != target.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!match(pattern.args[i], target.args[i], subst)) return false;
  }
  return true;
}

namespace {

bool subsume_from(const Clause& general, const Clause& specific, std::size_t index,
                  Substitution& subst) {
  if (index == general.literals.size()) return true;
  const Literal& lit = general.literals[index];
  for (const Literal& candidate : specific.literals) {
    if (candidate.positive != lit.positive || candidate.predicate != lit.predicate ||
        candidate.args.size() != lit.args.size()) {
      continue;
    }
    Substitution saved = subst;
    bool ok = true;
    for (std::size_t i = 0; i < lit.args.size(); ++i) {
      if (!match(lit.args[i], candidate.args[i], subst)) {
        ok = false;
        break;
      }
    }
    if (ok && subsume_from(general, specific, index + 1, subst)) return true;
    subst = std::move(saved);
  }
  return false;
}

}  // namespace

bool subsumes(const Clause& general, const Clause& specific) {
  if (general.literals.size() > specific.literals.size()) return false;
  Substitution subst;
  return subsume_from(general, specific, 0, subst);
}

Clause rename_variables(const Clause& c, const std::string& prefix) {
  Clause out;
  out.literals.reserve(c.literals.size());
  std::function<ClauseTerm(const ClauseTerm&)> rename = [&](const ClauseTerm& t) {
    if (t.is_variable) return ClauseTerm::variable(prefix + t.name);
    ClauseTerm r = ClauseTerm::functor(t.name);
    r.args.reserve(t.args.size());
    for (const ClauseTerm& a : t.args) r.args.push_back(rename(a));
    return r;
  };
  for (const Literal& l : c.literals) {
    Literal renamed{l.positive, l.predicate, {}};
    renamed.args.reserve(l.args.size());
    for (const ClauseTerm& t : l.args) renamed.args.push_back(rename(t));
    out.literals.push_back(std::move(renamed));
  }
  return out;
}

}  // namespace nsr::prover
