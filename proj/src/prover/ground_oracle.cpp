#include "nsr/prover/ground_oracle.hpp"

#include <sstream>

namespace nsr::prover {

using fol::Formula;
using fol::FormulaPtr;
using fol::NodeKind;

bool OracleModel::holds(const std::string& predicate,
                        const std::vector<std::size_t>& tuple) const {
  auto it = relations.find(predicate);
  return it != relations.end() && it->second.contains(tuple);
}

std::string OracleModel::to_string() const {
  std::ostringstream out;
  out << "domain size " << domain_size << "; ";
  for (const auto& [name, elem] : constants) out << name << "=e" << elem << " ";
  out << "; ";
  for (const auto& [name, tuples] : relations) {
    out << name << "={";
    bool first = true;
    for (const auto& tuple : tuples) {
      if (!first) out << ",";
      first = false;
      out << "(";
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) out << ",";
        out << "e" << tuple[i];
      }
      out << ")";
    }
    out << "} ";
  }
  return out.str();
}

std::string to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::True: return "True";
    case OracleKind::False: return "False";
    case OracleKind::Uncertain: return "Uncertain";
    case OracleKind::Undecided: return "Undecided";
  }
  return "Undecided";
}

std::optional<Label> OracleResult::to_label() const {
  switch (kind) {
    case OracleKind::True: return Label::True;
    case OracleKind::False: return Label::False;
    case OracleKind::Uncertain: return Label::Uncertain;
    case OracleKind::Undecided: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool quantifier_free(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Predicate: return true;
    case NodeKind::ForAll:
    case NodeKind::Exists: return false;
    case NodeKind::Not: return quantifier_free(*f.left());
    default: return quantifier_free(*f.left()) && quantifier_free(*f.right());
  }
}

// One interpretation under enumeration: relation extensions are bitmasks
// over tuple indices in base domain_size.
struct Assignment {
  std::size_t domain_size = 0;
  std::vector<std::size_t> constant_elems;           // by constant index
  std::vector<std::uint64_t> relation_masks;         // by predicate index
  std::vector<std::uint64_t> tuple_counts;           // n^arity per predicate
};

class Evaluator {
 public:
  Evaluator(const std::map<std::string, std::size_t>& predicate_index,
            const std::map<std::string, std::size_t>& constant_index)
      : predicate_index_(predicate_index), constant_index_(constant_index) {}

  bool eval(const Formula& f, const Assignment& a) {
    switch (f.kind()) {
      case NodeKind::Predicate: {
        std::uint64_t index = 0;
        std::uint64_t stride = 1;
        for (const fol::Term& t : f.args()) {
          const std::size_t elem = t.kind == fol::TermKind::Variable
                                       ? lookup(t.name)
                                       : a.constant_elems[constant_index_.at(t.name)];
          index += elem * stride;
          stride *= a.domain_size;
        }
        const std::size_t p = predicate_index_.at(f.name());
        return (a.relation_masks[p] >> index) & 1u;
      }
      case NodeKind::Not: return !eval(*f.left(), a);
      case NodeKind::And: return eval(*f.left(), a) && eval(*f.right(), a);
      case NodeKind::Or: return eval(*f.left(), a) || eval(*f.right(), a);
      case NodeKind::Implies: return !eval(*f.left(), a) || eval(*f.right(), a);
      case NodeKind::Iff: return eval(*f.left(), a) == eval(*f.right(), a);
      case NodeKind::ForAll: {
        for (std::size_t e = 0; e < a.domain_size; ++e) {
          env_.emplace_back(f.name(), e);
          const bool ok = eval(*f.left(), a);
          env_.pop_back();
          if (!ok) return false;
        }
        return true;
      }
      case NodeKind::Exists: {
        for (std::size_t e = 0; e < a.domain_size; ++e) {
          env_.emplace_back(f.name(), e);
          const bool ok = eval(*f.left(), a);
          env_.pop_back();
          if (ok) return true;
        }
        return false;
      }
    }
    return false;
  }

 private:
  std::size_t lookup(const std::string& name) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    return 0;  // unreachable for closed formulas
  }

  const std::map<std::string, std::size_t>& predicate_index_;
  const std::map<std::string, std::size_t>& constant_index_;
  std::vector<std::pair<std::string, std::size_t>> env_;
};

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > cap / std::max<std::uint64_t>(base, 1)) {
      throw ResourceLimitError("model enumeration exceeds the assignment cap");
    }
    out *= base;
  }
  return out;
}

}  // namespace

OracleResult ground_oracle(const std::vector<FormulaPtr>& premises,
                           const FormulaPtr& conclusion, const OracleOptions& options) {
  std::vector<FormulaPtr> all = premises;
  all.push_back(conclusion);
  const fol::Signature sig = fol::collect_signature(all);

  std::map<std::string, std::size_t> predicate_index;
  std::vector<std::pair<std::string, std::size_t>> predicates;  // name, arity
  for (const auto& [name, arity] : sig.predicates) {
    predicate_index[name] = predicates.size();
    predicates.emplace_back(name, arity);
  }
  std::map<std::string, std::size_t> constant_index;
  std::vector<std::string> constants;
  for (const std::string& name : sig.constants) {
    constant_index[name] = constants.size();
    constants.push_back(name);
  }

  bool ground = true;
  for (const FormulaPtr& f : all) ground = ground && quantifier_free(*f);

  OracleResult result;
  Evaluator evaluator(predicate_index, constant_index);
  bool premises_model_found = false;

  for (std::size_t n = 1; n <= options.max_domain; ++n) {
    // Guard the total enumeration size for this domain before starting.
    std::uint64_t total = checked_pow(n, constants.size(), options.max_assignments);
    std::vector<std::uint64_t> tuple_counts;
    for (const auto& [name, arity] : predicates) {
      (void)name;
      const std::uint64_t tuples = checked_pow(n, arity, 63);
      tuple_counts.push_back(tuples);
      const std::uint64_t extensions = checked_pow(2, tuples, options.max_assignments);
      if (total > options.max_assignments / std::max<std::uint64_t>(extensions, 1)) {
        throw ResourceLimitError("model enumeration exceeds the assignment cap");
      }
      total *= extensions;
    }
    if (result.assignments_checked > options.max_assignments - total) {
      throw ResourceLimitError("model enumeration exceeds the assignment cap");
    }

    Assignment a;
    a.domain_size = n;
    a.constant_elems.assign(constants.size(), 0);
    a.relation_masks.assign(predicates.size(), 0);
    a.tuple_counts = tuple_counts;

    bool more_constants = true;
    while (more_constants) {
      a.relation_masks.assign(predicates.size(), 0);
      bool more_relations = true;
      while (more_relations) {
        ++result.assignments_checked;
        bool premises_hold = true;
        for (const FormulaPtr& p : premises) {
          if (!evaluator.eval(*p, a)) {
            premises_hold = false;
            break;
          }
        }
        if (premises_hold) {
          premises_model_found = true;
          const bool conclusion_holds = evaluator.eval(*conclusion, a);
          auto& witness =
              conclusion_holds ? result.witness_conclusion_true : result.witness_conclusion_false;
          if (!witness.has_value()) {
            OracleModel model;
            model.domain_size = n;
            for (std::size_t c = 0; c < constants.size(); ++c) {
              model.constants[constants[c]] = a.constant_elems[c];
            }
            for (std::size_t p = 0; p < predicates.size(); ++p) {
              auto& tuples = model.relations[predicates[p].first];
              const std::size_t arity = predicates[p].second;
              for (std::uint64_t t = 0; t < tuple_counts[p]; ++t) {
                if (!((a.relation_masks[p] >> t) & 1u)) continue;
                std::vector<std::size_t> tuple(arity);
                std::uint64_t rest = t;
                for (std::size_t i = 0; i < arity; ++i) {
                  tuple[i] = rest % n;
                  rest /= n;
                }
                tuples.insert(std::move(tuple));
              }
            }
            witness = std::move(model);
          }
          if (result.witness_conclusion_true.has_value() &&
              result.witness_conclusion_false.has_value()) {
            result.kind = OracleKind::Uncertain;
            return result;
          }
        }
        // Odometer over relation masks.
        more_relations = false;
        for (std::size_t p = 0; p < predicates.size(); ++p) {
          if (a.relation_masks[p] + 1 < (tuple_counts[p] >= 64
                                             ? 0  // guarded above; unreachable
                                             : (1ull << tuple_counts[p]))) {
            ++a.relation_masks[p];
            for (std::size_t q = 0; q < p; ++q) a.relation_masks[q] = 0;
            more_relations = true;
            break;
          }
        }
      }
      // Odometer over constant interpretations.
      more_constants = false;
      for (std::size_t c = 0; c < constants.size(); ++c) {
        if (a.constant_elems[c] + 1 < n) {
          ++a.constant_elems[c];
          for (std::size_t d = 0; d < c; ++d) a.constant_elems[d] = 0;
          more_constants = true;
          break;
        }
      }
    }
  }

  if (!premises_model_found) {
    result.kind = OracleKind::Undecided;
    result.premises_unsatisfiable = true;
    result.unsat_definitive = ground && options.max_domain >= std::max<std::size_t>(
                                                                  constants.size(), 1);
    return result;
  }
  result.kind =
      result.witness_conclusion_true.has_value() ? OracleKind::True : OracleKind::False;
  return result;
}

}  // namespace nsr::prover
