#pragma once

#include <stdexcept>

namespace mullreg {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation parameters outside their contract (e.g. a >= b, b < 2).
class BadParameters : public Error {
public:
    using Error::Error;
};

/// Partition text that does not parse as an integer sequence.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Parsed sequence that is not non-increasing or mixes zeros with positives.
class NotNonIncreasing : public ParseError {
public:
    using ParseError::ParseError;
};

class BoxNotInPartition : public Error {
public:
    using Error::Error;
};

class NotAPartition : public Error {
public:
    using Error::Error;
};

class NotBRegular : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class NotCrValid : public Error {
public:
    using Error::Error;
};

class MalformedDiagram : public Error {
public:
    using Error::Error;
};

class NotAddable : public Error {
public:
    using Error::Error;
};

class NotRemovable : public Error {
public:
    using Error::Error;
};

/// A proved statement failed during a scan: always an implementation bug.
class ScanViolation : public Error {
public:
    using Error::Error;
};

/// An internal invariant that should be unreachable was violated.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace mullreg
