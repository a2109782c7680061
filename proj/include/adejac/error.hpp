#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace adejac {

// All recoverable failures carry a stable error name (e.g. "InvalidRank",
// "AssumptionNotSatisfied") so that callers and the CLI can dispatch on it.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& message)
{
    throw DomainError(name, message);
}

inline void require(bool condition, const std::string& name, const std::string& message)
{
    if (!condition)
        fail(name, message);
}

} // namespace adejac
