#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace confspace {

using Integer = mpz_class;
using Rational = mpq_class;

/// Input rejected while parsing or validating a document.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural invariant of the input data does not hold.
class ValidationError : public InputError {
public:
    using InputError::InputError;
};

/// An operation was called outside its domain.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal mathematical contract broken (e.g. d^2 != 0).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Parses "p/q" or "p" with optional sign. Throws InputError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

} // namespace confspace
