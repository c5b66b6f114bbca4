#pragma once

#include <stdexcept>
#include <string>

namespace kmoduli {

/// Domain error carrying a short machine-readable code plus detail text.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  explicit Error(std::string code) : Error(std::move(code), "") {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

}  // namespace kmoduli
