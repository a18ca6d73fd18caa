#pragma once

#include <stdexcept>
#include <string>

namespace tsc {

/// Malformed or out-of-range input (bad graph, unknown face, bad field spec).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A closed-form formula was asked for outside the range where it is defined.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

} // namespace tsc
