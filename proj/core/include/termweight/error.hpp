#pragma once

#include <stdexcept>
#include <string>

namespace termweight {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failures: missing files, unreadable paths.
class IoError : public Error {
public:
    using Error::Error;
};

// Malformed input text: corpus lines, model files, config files.
// Messages carry 1-based line numbers where applicable.
class FormatError : public Error {
public:
    using Error::Error;
};

// Invalid configuration: unknown keys, out-of-range values.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Degenerate computations: singular terms under didf, pidf on a term
// present in every document, invalid scheme parameters.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace termweight
