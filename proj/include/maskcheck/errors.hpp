#pragma once

#include <stdexcept>
#include <string>

namespace maskcheck {

// Base of every error raised by the library. Anything derived from Error
// other than InvariantViolation signals bad input or an unsupported request.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class WidthMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// A checked w-bit word operation produced a value >= 2^w.
class WordOverflow : public Error {
public:
    using Error::Error;
};

// A proved property failed to hold. Never thrown by a correct build.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace maskcheck
