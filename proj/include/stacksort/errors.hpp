#pragma once

#include <stdexcept>
#include <string>

namespace stacksort {

// Raised when an operation would exceed its configured resource guard
// (exhaustive enumeration sizes, brute-force bounds, state encodings).
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stacksort
