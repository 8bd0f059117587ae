#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morin {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& expected, const std::string& input)
        : Error("parse error at position " + std::to_string(position) + ": expected " + expected +
                " in \"" + input + "\""),
          position_(position), expected_(expected)
    {
    }

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

// Product of two non-constant letters would leave the degree <= 1 letter space.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class CardinalityMismatch : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class MissingRow : public Error {
public:
    using Error::Error;
};

// Requested singularity/parameter pair has no probe data.
class CatalogError : public Error {
public:
    using Error::Error;
};

class NonExactDivision : public Error {
public:
    using Error::Error;
};

class SolveError : public Error {
public:
    enum class Kind { Underdetermined, Inconsistent, NonIntegerSolution, NoSolution };

    SolveError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace morin
