#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace beauty {

// Module error with a stable machine-readable code (e.g. "BAD_RATIONAL",
// "UNKNOWN_LABEL"). The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// One violation found by validate(); `detail` names the offending element.
struct ValidationError {
  std::string code;
  std::string detail;
};

// Thrown when a GameSpec fails validation; carries every violation found.
class ValidationFailure : public std::runtime_error {
public:
  explicit ValidationFailure(std::vector<ValidationError> errors)
      : std::runtime_error(render(errors)), errors_(std::move(errors)) {}

  const std::vector<ValidationError>& errors() const { return errors_; }

private:
  static std::string render(const std::vector<ValidationError>& errors) {
    std::string out = "invalid game spec:";
    for (const auto& e : errors) out += "\n  " + e.code + ": " + e.detail;
    return out;
  }

  std::vector<ValidationError> errors_;
};

}  // namespace beauty
