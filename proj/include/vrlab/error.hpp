#pragma once

#include <stdexcept>
#include <string>

namespace vrlab {

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a configuration (CLI flags, sweep config) is invalid.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace vrlab
