#pragma once

#include <stdexcept>
#include <string>

namespace g3af {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a documented precondition (foreign argument, partial labelling, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

/// Formula text or document text could not be parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A brute-force enumeration would exceed the configured number of unknowns.
class SearchSpaceError : public Error {
public:
    using Error::Error;
};

}  // namespace g3af
