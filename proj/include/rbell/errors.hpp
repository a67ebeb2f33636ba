#pragma once

#include <stdexcept>
#include <string>

namespace rbell {

/// Input outside an operation's domain (bad arguments, guards, poles).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An exact step that must succeed failed; indicates a broken identity or a bug.
class InconsistencyError : public std::logic_error {
public:
    explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// An iterative approximation hit its hard work cap before meeting tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rbell
