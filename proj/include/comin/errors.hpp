#pragma once

#include <stdexcept>
#include <string>

namespace comin {

// Bad (family, rank, node) combinations, corrupted catalog data.  CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller passed an unusable argument (non-dominant weight, empty subset,
// r out of range, unknown pair label).  CLI usage error.
class ArgError : public std::runtime_error {
public:
    explicit ArgError(const std::string& msg) : std::runtime_error(msg) {}
};

// A guarded enumeration would exceed its size bound.
class CapacityError : public ArgError {
public:
    explicit CapacityError(const std::string& msg) : ArgError(msg) {}
};

// An internal invariant broke: signals a bug, never a bad input.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace comin
