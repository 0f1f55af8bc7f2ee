#pragma once

#include <stdexcept>
#include <string>

namespace ensy {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class SchemaMismatch : public Error {
public:
    using Error::Error;
};

/// CSV cell that could not be parsed; carries 0-based data row and column name.
class ParseError : public Error {
public:
    ParseError(std::size_t row, std::string column, const std::string& msg)
        : Error("row " + std::to_string(row) + ", column \"" + column + "\": " + msg),
          row_(row), column_(std::move(column)) {}
    std::size_t row() const { return row_; }
    const std::string& column() const { return column_; }

private:
    std::size_t row_;
    std::string column_;
};

class UnknownLabel : public Error {
public:
    using Error::Error;
};

class UnknownCategory : public Error {
public:
    using Error::Error;
};

class BoundsViolation : public Error {
public:
    using Error::Error;
};

class DegenerateSplit : public Error {
public:
    using Error::Error;
};

class EmptyComplement : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class SamplingStarved : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class DegenerateTraining : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class EmptyEvaluation : public Error {
public:
    using Error::Error;
};

class InsufficientNeighbors : public Error {
public:
    using Error::Error;
};

class EmptyClass : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace ensy
