#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace kha {

// Library-wide error with a stable machine-readable code. The CLI surfaces
// these verbatim as {code, message, context}.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::map<std::string, std::string> context = {})
      : std::runtime_error(message), code_(std::move(code)),
        context_(std::move(context)) {}

  const std::string& code() const { return code_; }
  const std::map<std::string, std::string>& context() const { return context_; }

 private:
  std::string code_;
  std::map<std::string, std::string> context_;
};

}  // namespace kha
