#pragma once

#include <stdexcept>
#include <string>

namespace robinlab {

// Thrown when an enclosure comparison is still ambiguous after the
// configured number of precision doublings.
class PrecisionExhausted : public std::runtime_error {
public:
    explicit PrecisionExhausted(const std::string& what)
        : std::runtime_error(what) {}
};

// Thrown when a request would exceed the configured memory budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace robinlab
