#ifndef PUISEUX_ERRORS_HPP
#define PUISEUX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace puiseux {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input was violated
/// (zero denominator, non-prime modulus, element outside the monoid, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class NotMemberError : public DomainError {
public:
    using DomainError::DomainError;
};

class TrivialMonoidError : public DomainError {
public:
    TrivialMonoidError() : DomainError("operation requires a nontrivial monoid") {}
};

class UnsupportedFamilyError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedMonoidError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedFieldError : public DomainError {
public:
    using DomainError::DomainError;
};

class NoAtomsError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An exponent produced by deflation (or present in the input) does not lie
/// in the exponent monoid. The offending exponent is kept in text form.
class ExponentNotInMonoidError : public DomainError {
public:
    explicit ExponentNotInMonoidError(std::string exponent)
        : DomainError("exponent " + exponent + " is not in the monoid"), exponent_(std::move(exponent)) {}

    const std::string& exponent() const noexcept { return exponent_; }

private:
    std::string exponent_;
};

/// A configured size limit (polynomial degree, table size) was exceeded.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// Syntax error in monoid or polynomial text; carries the byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Text parsed but the family parameters are invalid (non-prime, repeated prime, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace puiseux

#endif
