#pragma once

#include <stdexcept>
#include <string>

namespace dca {

// Bad or out-of-contract input (malformed file, precondition violation).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed the configured cap.
struct cap_exceeded : input_error {
    explicit cap_exceeded(const std::string& what) : input_error(what) {}
};

// A structural guarantee the implementation relies on failed to hold.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Enumeration cap, overridable through the DCA_ENUM_CAP environment variable.
long long enum_cap();

}  // namespace dca
