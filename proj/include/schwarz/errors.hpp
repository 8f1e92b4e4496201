#ifndef SCHWARZ_ERRORS_HPP
#define SCHWARZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schwarz
{

// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the admissible domain (|z| >= 1, alpha out of range, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

// Series order too small for the requested operation.
class DegenerateOrderError : public Error
{
public:
    using Error::Error;
};

// Reciprocal of a series with vanishing constant term.
class NonInvertibleError : public Error
{
public:
    using Error::Error;
};

// Logarithm or fractional power of a series with vanishing constant term.
class BranchPointError : public Error
{
public:
    using Error::Error;
};

// Schwarzian of a function with f'(0) = 0.
class CriticalPointError : public Error
{
public:
    using Error::Error;
};

// Composition with an inner series whose constant term is nonzero.
class CompositionDomainError : public Error
{
public:
    using Error::Error;
};

// Iterative procedure failed (no bracket, iteration cap reached).
class NumericError : public Error
{
public:
    using Error::Error;
};

// Malformed coefficient file or text input.
class FormatError : public Error
{
public:
    using Error::Error;
};

// File could not be opened, read or written.
class IoError : public Error
{
public:
    using Error::Error;
};

} // namespace schwarz

#endif
