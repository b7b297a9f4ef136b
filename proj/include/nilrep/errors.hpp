#ifndef NILREP_ERRORS_HPP
#define NILREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilrep {

/// Domain error with a stable machine-readable class code.
///
/// Codes are short CamelCase strings ("JacobiViolation", "NotAbelian", ...)
/// that survive into CLI error reports; the message is free-form detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), m_code(std::move(code)) {}

  const std::string& code() const { return m_code; }

private:
  std::string m_code;
};

} // namespace nilrep

#endif
