#pragma once

#include <stdexcept>
#include <string>

namespace secoal {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge lists, partition specs, corpus lines).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An order limit was exceeded: the vertex cap, the isomorphism cap or a
/// solver search cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A precondition on a library call was violated (overlapping coalition
/// sets, a non-partition, a non-tree passed to a tree routine, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed. Raised when a construction that is
/// supposed to be verified by design does not verify.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

}  // namespace secoal
