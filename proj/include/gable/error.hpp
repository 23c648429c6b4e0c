#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gable {

/// Exception carrying a machine-readable kind and an optional witness
/// (the offending simplex, point, label, ...) rendered as text.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message, std::string witness = {})
      : std::runtime_error(message), kind_(std::move(kind)), witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  std::string witness_;
};

}  // namespace gable
