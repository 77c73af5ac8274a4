#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regbound {

// Malformed graph6 input; offset is the byte position where decoding failed.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input exceeds a documented size cap (vertex count, enumeration guard).
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Operation called on a graph that violates its structural preconditions
// (disconnected, not regular, girth too small, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical routine failed (eigensolver non-convergence, integer overflow).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace regbound
