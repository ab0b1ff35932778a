#pragma once

#include <stdexcept>
#include <string>

namespace cabling {

// Bad user input (malformed JSON, precondition violations, non-reduced
// slopes, ...). The CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant. The CLI maps this to exit code 1.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cabling
