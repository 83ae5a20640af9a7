#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pptor {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1, except ParseError which is a usage error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed DSL input (formula, group, subgroup or cardinal text).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token)
        : Error(message + " at " + std::to_string(line) + ":" + std::to_string(column) +
                (token.empty() ? std::string() : " near '" + token + "'")),
          line_(line), column_(column), token_(std::move(token)) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& token() const { return token_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

/// An operation received a formula with the wrong number of free variables.
class ArityError : public Error {
public:
    using Error::Error;
};

/// Element/subgroup does not live in the group it was paired with.
class MembershipError : public Error {
public:
    using Error::Error;
};

/// A precondition about the mathematical input failed (not pure, not finite, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace pptor
