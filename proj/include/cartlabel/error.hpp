#pragma once

#include <stdexcept>
#include <string>

namespace cartlabel {

// Error categories map onto the CLI exit-code contract:
// Validation/Build -> 1, Usage -> 2, Format/Budget -> 3.
enum class ErrorKind { Format, Validation, Budget, Build, Usage };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_format(const std::string& msg) { throw Error(ErrorKind::Format, msg); }
[[noreturn]] inline void throw_validation(const std::string& msg) { throw Error(ErrorKind::Validation, msg); }
[[noreturn]] inline void throw_budget(const std::string& msg) { throw Error(ErrorKind::Budget, msg); }
[[noreturn]] inline void throw_build(const std::string& msg) { throw Error(ErrorKind::Build, msg); }

} // namespace cartlabel
