#ifndef LEBOUND_ERRORS_HPP
#define LEBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lebound {

// Relation input would relate an element to itself after closure.
struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An element index is outside 0..n-1, or an index argument is out of range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Input exceeds a size guard of an exact/exhaustive operation.
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

// A documented precondition does not hold for the given arguments.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// An internal consistency check failed; indicates a bug (or a falsified
// theorem), never bad user input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed input document (JSON or text relation list).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lebound

#endif
