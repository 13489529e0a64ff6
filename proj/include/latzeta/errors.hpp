#pragma once

#include <stdexcept>
#include <string>

namespace latzeta {

// Argument outside an operation's domain (wrong parity, unsupported phase pair, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Series parameters outside the absolute-convergence guard.
class ConvergenceError : public std::domain_error {
public:
    explicit ConvergenceError(const std::string& what) : std::domain_error(what) {}
};

// Specialization would evaluate a zeta factor at or left of its pole.
class SingularityError : public std::domain_error {
public:
    explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

// The term-collapse pipeline did not reach the expected single term.
class CollapseError : public std::runtime_error {
public:
    explicit CollapseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace latzeta
