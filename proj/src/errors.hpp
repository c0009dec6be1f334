#pragma once

#include <stdexcept>
#include <string>

namespace rshare {

// Problems with user-supplied data (bad edges, bad parameters, bad text).
// The CLI maps these to exit code 1, the C API to RSHARE_ERR_INVALID.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text; the message carries a 1-based line number.
class ParseError : public InvalidInput {
public:
    ParseError(int line, const std::string& what)
        : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : InvalidInput(what), line_(0) {}
    int line() const { return line_; }

private:
    int line_;
};

// Operation requires a connected graph.
class NotConnected : public InvalidInput {
public:
    NotConnected() : InvalidInput("graph must be connected") {}
};

} // namespace rshare
