#pragma once

#include <stdexcept>
#include <string>

namespace archrec {

/// Error type thrown for configuration, parse and integrity failures.
/// Messages carry enough context (file, line) to act on without a stack trace.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace archrec
