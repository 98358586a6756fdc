#pragma once

#include <stdexcept>
#include <string>

namespace iwa {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Inversion of a residue that shares a factor with the modulus.
class NonUnit : public Error {
public:
    using Error::Error;
};

/// Mixing residues or algebra elements with different (p, k) or level.
class ModulusMismatch : public Error {
public:
    using Error::Error;
};
using ContextMismatch = ModulusMismatch;

/// Unit-root extraction requested for a non-ordinary a_p.
class NotOrdinary : public Error {
public:
    using Error::Error;
};

class NotSupersingular : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class ConductorExceedsLevel : public Error {
public:
    using Error::Error;
};

/// Exact division failed; carries the first obstructed coordinate.
class NotDivisible : public Error {
public:
    NotDivisible(const std::string& msg, long coordinate)
        : Error(msg), obstruction_coordinate(coordinate) {}
    long obstruction_coordinate;
};

/// A decidable clause of the running hypotheses fails on the input.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(const std::string& msg, std::string clause_)
        : Error(msg), clause(std::move(clause_)) {}
    std::string clause;
};

class BadReduction : public Error {
public:
    using Error::Error;
};

class RamifiedP : public Error {
public:
    using Error::Error;
};

class RamifiedPrimeInN : public Error {
public:
    using Error::Error;
};

class NotAdmissibleAtTarget : public Error {
public:
    using Error::Error;
};

class SignClassMismatch : public Error {
public:
    using Error::Error;
};

class ParityMismatch : public Error {
public:
    using Error::Error;
};

class ExceptionalTrivialCharacter : public Error {
public:
    using Error::Error;
};

class PrecisionTooLow : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class CertificateFailure : public Error {
public:
    using Error::Error;
};

}  // namespace iwa
