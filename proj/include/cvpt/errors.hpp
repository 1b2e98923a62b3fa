#pragma once

#include <stdexcept>
#include <string>

namespace cvpt {

// Precondition on an integer order or size argument failed.
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Value outside the mathematical domain (division by zero, log of a non-positive number, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Numerical solver failed to produce a stationary point.
class solver_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input; carries the 1-based line number when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace cvpt
