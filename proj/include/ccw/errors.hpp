#pragma once

#include <stdexcept>
#include <string>

namespace ccw {

/// Bad user input: violated preconditions, unparsable values, wrong field.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Mathematically undefined request (inverse of zero, element outside a subfield image).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured cap (table size, enumeration count, subset count) was exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure; always a bug, never a user error.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

} // namespace ccw
