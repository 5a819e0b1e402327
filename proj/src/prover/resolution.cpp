#include "nsr/prover/resolution.hpp"

#include <chrono>
#include <queue>

namespace nsr::prover {

std::string to_string(ProofStatus status) {
  switch (status) {
    case ProofStatus::Proved: return "Proved";
    case ProofStatus::Saturated: return "Saturated";
    case ProofStatus::ResourceOut: return "ResourceOut";
  }
  return "ResourceOut";
}

namespace {

struct QueueEntry {
  std::size_t literal_count;
  std::size_t weight;
  std::size_t id;  // insertion order breaks ties, keeping selection deterministic

  bool operator>(const QueueEntry& other) const {
    if (literal_count != other.literal_count) return literal_count > other.literal_count;
    if (weight != other.weight) return weight > other.weight;
    return id > other.id;
  }
};

class Saturation {
 public:
  explicit Saturation(const ResourceLimits& limits) : limits_(limits) {}

  ProofResult run(const std::vector<Clause>& inputs) {
    start_ = std::chrono::steady_clock::now();
    for (const Clause& c : inputs) {
      if (c.empty()) return finish(ProofStatus::Proved);
      insert(c);
    }
    while (!queue_.empty()) {
      if (out_of_time()) return finish(ProofStatus::ResourceOut);
      const std::size_t given_index = queue_.top().id;
      queue_.pop();
      if (processed_[given_index]) continue;
      processed_[given_index] = true;
      active_.push_back(given_index);

      const Clause given = clauses_[given_index];  // copy: clauses_ may reallocate
      if (!process_factors(given)) return result_;
      for (std::size_t active_index : active_) {
        if (!process_resolvents(given, clauses_[active_index])) return result_;
      }
    }
    return finish(pruned_ ? ProofStatus::ResourceOut : ProofStatus::Saturated);
  }

 private:
  bool out_of_time() const {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double>(elapsed).count() > limits_.max_seconds;
  }

  ProofResult finish(ProofStatus status) {
    result_.status = status;
    result_.clauses_generated = generated_;
    result_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

  // Returns false when saturation must stop; result_ is then final.
  bool offer(std::vector<Literal> literals) {
    ++generated_;
    if (generated_ > limits_.max_clauses) {
      finish(ProofStatus::ResourceOut);
      return false;
    }
    bool tautology = false;
    Clause c = canonicalize(std::move(literals), &tautology);
    if (tautology) return true;
    if (c.empty()) {
      finish(ProofStatus::Proved);
      return false;
    }
    if (c.max_literal_depth() > limits_.max_literal_depth) {
      pruned_ = true;
      return true;
    }
    for (const Clause& kept : clauses_) {
      if (subsumes(kept, c)) return true;
    }
    insert(std::move(c));
    return true;
  }

  void insert(Clause c) {
    // Identical duplicates are caught by subsumption for derived clauses;
    // inputs are checked here so the queue never holds two copies.
    for (const Clause& kept : clauses_) {
      if (kept == c) return;
    }
    const std::size_t id = clauses_.size();
    queue_.push(QueueEntry{c.literals.size(), c.weight(), id});
    clauses_.push_back(std::move(c));
    processed_.push_back(false);
  }

  bool process_factors(const Clause& given) {
    for (std::size_t i = 0; i < given.literals.size(); ++i) {
      for (std::size_t j = i + 1; j < given.literals.size(); ++j) {
        const Literal& a = given.literals[i];
        const Literal& b = given.literals[j];
        if (a.positive != b.positive || a.predicate != b.predicate ||
            a.args.size() != b.args.size()) {
          continue;
        }
        Substitution subst;
        if (!unify_args(a.args, b.args, subst)) continue;
        std::vector<Literal> lits;
        lits.reserve(given.literals.size() - 1);
        for (std::size_t k = 0; k < given.literals.size(); ++k) {
          if (k == j) continue;
          lits.push_back(apply_substitution(given.literals[k], subst));
        }
        if (!offer(std::move(lits))) return false;
      }
    }
    return true;
  }

  bool process_resolvents(const Clause& given, const Clause& partner) {
    const Clause lhs = rename_variables(given, "L");
    const Clause rhs = rename_variables(partner, "R");
    for (std::size_t i = 0; i < lhs.literals.size(); ++i) {
      for (std::size_t j = 0; j < rhs.literals.size(); ++j) {
        if (!lhs.literals[i].complements(rhs.literals[j])) continue;
        Substitution subst;
        if (!unify_args(lhs.literals[i].args, rhs.literals[j].args, subst)) continue;
        std::vector<Literal> lits;
        lits.reserve(lhs.literals.size() + rhs.literals.size() - 2);
        for (std::size_t k = 0; k < lhs.literals.size(); ++k) {
          if (k != i) lits.push_back(apply_substitution(lhs.literals[k], subst));
        }
        for (std::size_t k = 0; k < rhs.literals.size(); ++k) {
          if (k != j) lits.push_back(apply_substitution(rhs.literals[k], subst));
        }
        if (!offer(std::move(lits))) return false;
      }
    }
    return true;
  }

  const ResourceLimits& limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Clause> clauses_;
  std::vector<bool> processed_;
  std::vector<std::size_t> active_;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>> queue_;
  std::size_t generated_ = 0;
  bool pruned_ = false;
  ProofResult result_;
};

}  // namespace

ProofResult refute(const std::vector<Clause>& clauses, const ResourceLimits& limits) {
  return Saturation(limits).run(clauses);
}

}  // namespace nsr::prover
