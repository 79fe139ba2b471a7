#ifndef FACTORKIT_ERRORS_HPP
#define FACTORKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace factorkit {

// Raised by the text-format parsers; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace factorkit

#endif
