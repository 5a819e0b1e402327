#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsr::prover {

// Hard caps on one proof attempt. All strictly positive.
struct ResourceLimits {
  std::size_t max_clauses = 50000;
  double max_seconds = 10.0;
  std::size_t max_literal_depth = 12;
};

enum class ProofStatus { Proved, Saturated, ResourceOut };

std::string to_string(ProofStatus status);

struct ProofResult {
  ProofStatus status = ProofStatus::ResourceOut;
  std::size_t clauses_generated = 0;
  double elapsed_seconds = 0.0;
};

// Thrown when a transformation (CNF distribution, model enumeration)
// exceeds its configured cap before a search even starts.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nsr::prover
