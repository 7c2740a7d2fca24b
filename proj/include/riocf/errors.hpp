#pragma once

#include <stdexcept>
#include <string>

namespace riocf {

// All library failures carry a stable kind tag plus the process exit code
// the CLI maps them to: 2 = malformed input, 3 = violated precondition,
// 4 = a verification that was expected to hold did not.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message, int exit_code)
        : std::runtime_error(kind + ": " + message),
          kind_(std::move(kind)),
          exit_code_(exit_code) {}

    const std::string& kind() const { return kind_; }
    int exit_code() const { return exit_code_; }

private:
    std::string kind_;
    int exit_code_;
};

class ParseError : public Error {
public:
    ParseError(std::string kind, const std::string& message)
        : Error(std::move(kind), message, 2) {}
};

class PreconditionError : public Error {
public:
    PreconditionError(std::string kind, const std::string& message)
        : Error(std::move(kind), message, 3) {}
};

class VerificationError : public Error {
public:
    VerificationError(std::string kind, const std::string& message)
        : Error(std::move(kind), message, 4) {}
};

}  // namespace riocf
