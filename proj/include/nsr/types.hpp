#pragma once

#include <optional>
#include <string>

namespace nsr {

// Three-way entailment label of the classification task.
enum class Label { True, False, Uncertain };

std::string to_string(Label label);

// Case-insensitive; returns nullopt for anything outside the label set.
std::optional<Label> label_from_string(const std::string& text);

// Causes that turn a pipeline query into a non-label outcome.
enum class ErrorClass {
  ArityMismatch,
  UnexpectedToken,
  EmptyPredicate,
  ForbiddenSymbol,
  UnboundVariable,
  MissingConclusion,
  ExtractionFailure,
  TransportError,
};

std::string to_string(ErrorClass cls);
std::optional<ErrorClass> error_class_from_string(const std::string& text);

}  // namespace nsr
