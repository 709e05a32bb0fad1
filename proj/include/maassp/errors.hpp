#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace maassp {

/// Input outside the contract of an operation (wrong field, rational
/// argument where an irrational is required, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument inside the mathematical domain but outside the accuracy box
/// the implementation guarantees.
class RangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed to converge or to certify its tolerance.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed configuration or data file.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation requested at (or too close to) a pole.  Carries the pole
/// location and, when known, the residue there.
class PoleError : public std::runtime_error {
public:
    PoleError(const std::string& what, std::complex<double> location,
              std::complex<double> residue = {0.0, 0.0})
        : std::runtime_error(what), location_(location), residue_(residue) {}

    std::complex<double> location() const { return location_; }
    std::complex<double> residue() const { return residue_; }

private:
    std::complex<double> location_;
    std::complex<double> residue_;
};

}  // namespace maassp
