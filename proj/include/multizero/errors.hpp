#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multizero {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

class NotPrincipal : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Parse failure with a 1-based source location.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnknownSpecies : public Error {
public:
    using Error::Error;
};

class DuplicateRateLabel : public Error {
public:
    using Error::Error;
};

class BlowupLimit : public Error {
public:
    using Error::Error;
};

class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class NotForest : public Error {
public:
    using Error::Error;
};

/// A constructive step produced something its invariants rule out.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace multizero
