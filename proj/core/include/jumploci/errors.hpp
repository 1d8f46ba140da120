#pragma once

#include <stdexcept>

namespace jumploci {

/// Malformed or inconsistent user input (bad syntax, schema violation,
/// dimension mismatch, precondition failure on user-supplied data).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configurable resource bound was exceeded (partition support size,
/// graph vertex bound, ...).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace jumploci
