#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

// Raised when an argument violates an operation's stated precondition.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a configured size or enumeration cap would be exceeded.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an iterative solver cannot meet its tolerance within its caps.
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw precondition_error(what);
}

}  // namespace renyi
