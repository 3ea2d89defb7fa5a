#pragma once

#include <stdexcept>
#include <string>

namespace trackbench {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// A file could not be read or did not match its format.
class ParseError : public Error {
public:
    using Error::Error;
};

// Loaded or constructed data violates a documented invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace trackbench
