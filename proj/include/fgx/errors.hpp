#pragma once
#include <stdexcept>
#include <string>

namespace fgx {

/* Mismatched shapes: different rings, variable counts, truncation orders. */
class StructuralError : public std::invalid_argument {
public:
    explicit StructuralError(const std::string& msg) : std::invalid_argument(msg) {}
};

/* Value-level violations: non-unit inversion, nonzero constant term where one
   is required, positive characteristic where zero is required, and failed
   operation preconditions. */
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

} // namespace fgx
