#pragma once

#include <stdexcept>
#include <string>

namespace cpt {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid values: indices out of range, mismatched order/dimension,
// symmetry conflicts, non-bijective permutations.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// The request is well-formed but exceeds an explicit size/budget gate
// (exhaustive scans, oracle dimension caps). Never raised silently.
class CapabilityError : public Error {
public:
    explicit CapabilityError(const std::string& what) : Error(what) {}
};

// A documented precondition of an operation does not hold for this input.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// File loading: syntax or semantic problem at a known location.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        std::string msg = "line " + std::to_string(line);
        if (column > 0) msg += ", column " + std::to_string(column);
        msg += ": " + what;
        return msg;
    }

    int line_;
    int column_;
};

} // namespace cpt
