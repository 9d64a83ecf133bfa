#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace attriscore {

// Domain error with a module-qualified code ("repair.search_aborted").
// The CLI turns these into structured JSON on stderr; library callers
// can dispatch on code() without parsing the message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

}  // namespace attriscore
