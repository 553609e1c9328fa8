#pragma once

#include <stdexcept>
#include <string>

namespace p7cover {

// Caller handed us something outside an operation's contract
// (out-of-range vertex, overlapping sets, invalid certificate, ...).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A structural fact that holds for every graph was observed to fail.
// Seeing one of these means a bug in this library, never bad input.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Exhaustive routine refused an instance above its size gate.
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// Search space exhausted without a solution (e.g. target not dominable).
class no_solution_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace p7cover
