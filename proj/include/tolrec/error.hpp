#pragma once

#include <stdexcept>
#include <string>

namespace tolrec {

// Base for everything thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A checked precondition of an algorithm does not hold (e.g. empty delta*).
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

// A size guard on an exponential procedure was exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

// Internal postcondition check failed. Indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace tolrec
