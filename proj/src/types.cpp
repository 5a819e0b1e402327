#include "nsr/types.hpp"

#include <algorithm>
#include <cctype>

namespace nsr {

namespace {

std::string lowercase(const std::string& text) {
  std::string out = text;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string to_string(Label label) {
  switch (label) {
    case Label::True: return "True";
    case Label::False: return "False";
    case Label::Uncertain: return "Uncertain";
  }
  return "Uncertain";
}

std::optional<Label> label_from_string(const std::string& text) {
  const std::string lower = lowercase(text);
  if (lower == "true") return Label::True;
  if (lower == "false") return Label::False;
  if (lower == "uncertain") return Label::Uncertain;
  return std::nullopt;
}

std::string to_string(ErrorClass cls) {
  switch (cls) {
    case ErrorClass::ArityMismatch: return "ArityMismatch";
    case ErrorClass::UnexpectedToken: return "UnexpectedToken";
    case ErrorClass::EmptyPredicate: return "EmptyPredicate";
    case ErrorClass::ForbiddenSymbol: return "ForbiddenSymbol";
    case ErrorClass::UnboundVariable: return "UnboundVariable";
    case ErrorClass::MissingConclusion: return "MissingConclusion";
    case ErrorClass::ExtractionFailure: return "ExtractionFailure";
    case ErrorClass::TransportError: return "TransportError";
  }
  return "ExtractionFailure";
}

std::optional<ErrorClass> error_class_from_string(const std::string& text) {
  static const std::pair<const char*, ErrorClass> table[] = {
      {"ArityMismatch", ErrorClass::ArityMismatch},
      {"UnexpectedToken", ErrorClass::UnexpectedToken},
      {"EmptyPredicate", ErrorClass::EmptyPredicate},
      {"ForbiddenSymbol", ErrorClass::ForbiddenSymbol},
      {"UnboundVariable", ErrorClass::UnboundVariable},
      {"MissingConclusion", ErrorClass::MissingConclusion},
      {"ExtractionFailure", ErrorClass::ExtractionFailure},
      {"TransportError", ErrorClass::TransportError},
  };
  for (const auto& [name, cls] : table) {
    if (text == name) return cls;
  }
  return std::nullopt;
}

}  // namespace nsr
