#pragma once

#include <stdexcept>
#include <string>

namespace sgt {

/// Syntax error in a textual input, with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg), line(line), column(column)
    {
    }

    int line;
    int column;
};

/// Well-formed input that violates a semantic invariant (dead end,
/// dangling successor, bad owner code, parameter out of range, ...).
class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A path/lasso that does not follow the game's edges.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration or search exceeded its configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A strategy template turned out to be unusable where it was applied
/// (e.g. extraction left a winning vertex without successors).
class TemplateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sgt
