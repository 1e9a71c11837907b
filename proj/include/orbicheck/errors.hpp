#pragma once

#include <stdexcept>
#include <string>

namespace orbicheck {

/** Input text could not be parsed; carries a character position when known. */
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, long pos = -1)
        : std::runtime_error(pos >= 0 ? msg + " (at position " + std::to_string(pos) + ")" : msg),
          position(pos) {}
    long position;
};

/** A structural precondition failed (bad dimensions, invalid group data, ...). */
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/** An enumeration exceeded its configured cap. */
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/** A verified-by-construction result failed its own check; indicates a bug. */
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace orbicheck
