#pragma once

#include <stdexcept>
#include <string>

namespace ffgrid {

// Base for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact search or enumeration was asked to run past its configured cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, const std::string& cap_name)
        : Error(what + " (cap: " + cap_name + ")"), cap_(cap_name) {}

    const std::string& cap() const noexcept { return cap_; }

private:
    std::string cap_;
};

// Malformed text input. Line numbers are 1-based; 0 means "no line".
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// A checked mathematical statement came out false on a concrete instance.
// Raised by the certificate builders and theorem evaluators; never caught
// inside the library.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

} // namespace ffgrid
