#pragma once

#include <stdexcept>
#include <string>

namespace hochster {

/// Raised when an enumeration would exceed its configured size cap; the
/// instance is beyond what the exact algorithms can handle in reasonable time.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hochster
