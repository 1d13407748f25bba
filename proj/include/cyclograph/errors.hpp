#pragma once

#include <stdexcept>
#include <string>

namespace cyclograph {

// Bad arguments, malformed input, ring mismatches. CLI exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a hard size limit (n > 16 etc). CLI exit code 3.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal exactness check failed; indicates an arithmetic bug.
struct ComputationError : std::runtime_error {
    explicit ComputationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Checkpoint file unreadable: bad magic, version or checksum.
struct LoadError : std::runtime_error {
    explicit LoadError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cyclograph
