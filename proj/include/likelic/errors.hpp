#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace likelic {

/// A well-formed request that cannot be answered: unknown vertex, self-loop,
/// reflexive query, conflicting evidence.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected DSL input. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, Range, Conflict, UnknownLabel };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          kind_(kind), line_(line), column_(column)
    {
    }

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

} // namespace likelic
