#pragma once

#include <stdexcept>
#include <string>

namespace preheight {

/// Input outside an operation's domain: zero denominator, a point not on
/// the curve, an iterate index out of range.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Exact computation would exceed a configured limit (bit budget,
/// enumeration cap). Raised instead of silently degrading precision.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace preheight
