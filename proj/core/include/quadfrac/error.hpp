#pragma once

#include <stdexcept>
#include <string>

namespace quadfrac {

enum class ErrorKind {
    InvalidRing,       // degenerate or non-squarefree d
    ParseError,        // element text rejected
    DivisionByZero,
    Unsupported,       // operation undefined for this ring
    OutOfDomain,       // precondition violation on an input value
    Exceptional,       // input lies in the ring's exceptional set
    Malformed,         // ill-formed decomposition (zero denominator, >3 terms)
    SearchFailure,     // bounded search exhausted
    InvariantViolation // internal contract broke; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace quadfrac
