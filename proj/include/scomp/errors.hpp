#pragma once

#include <stdexcept>
#include <string>

namespace scomp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input data (bad generators, bad matrices, bad files).
struct InputError : Error {
    using Error::Error;
};

/// A mathematical precondition does not hold (non-face argument, arity
/// mismatch, invalid substitution, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A configured size/enumeration cap was exceeded. `required` states the
/// limit that would have been needed.
struct ResourceError : Error {
    int required;
    ResourceError(const std::string& what, int required_limit)
        : Error(what), required(required_limit) {}
};

/// Text parse failure with 1-based location.
struct ParseError : InputError {
    int line;
    int column;
    ParseError(const std::string& what, int line_no, int col_no)
        : InputError("parse error at line " + std::to_string(line_no) + ", column " +
                     std::to_string(col_no) + ": " + what),
          line(line_no),
          column(col_no) {}
};

}  // namespace scomp
