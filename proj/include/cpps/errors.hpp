#pragma once

#include <stdexcept>
#include <string>

namespace cpps {

// Result does not fit in 128 bits (or in the 64-bit slot it was asked for).
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Argument outside the domain of a formula or algorithm (k < 2, x < 2, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Request exceeds the configured memory budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cpps
