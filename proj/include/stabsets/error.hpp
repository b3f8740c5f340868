#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stabsets {

enum class ErrorKind {
    invalid_input,
    contract_violation,
    no_solution,
    insufficient_slack,
    untrusted_subsolver,
    cap_exceeded,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::contract_violation: return "contract-violation";
    case ErrorKind::no_solution: return "no-solution";
    case ErrorKind::insufficient_slack: return "insufficient-slack";
    case ErrorKind::untrusted_subsolver: return "untrusted-subsolver";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    }
    return "unknown";
}

// Every failure raised by the library carries a kind so the CLI can map it
// onto an exit code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what) :
        std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string & what)
{
    throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string & what)
{
    if (! condition)
        fail(kind, what);
}

} // namespace stabsets
