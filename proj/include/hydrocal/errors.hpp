#ifndef HYDROCAL_ERRORS_HPP
#define HYDROCAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hydrocal {

/// Base class for all toolkit errors. Subclasses exist for conditions that
/// callers are expected to catch and handle individually.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- domain / drainage -------------------------------------------------------

class CycleDetected : public Error {
public:
    CycleDetected(const std::string& msg, int row, int col)
        : Error(msg), row(row), col(col) {}
    int row, col;  // one cell known to lie on the cycle
};

class DanglingFlowDirection : public Error {
public:
    DanglingFlowDirection(const std::string& msg, int row, int col)
        : Error(msg), row(row), col(col) {}
    int row, col;
};

class InactiveCell : public Error {
public:
    using Error::Error;
};

class ConstantDescriptor : public Error {
public:
    using Error::Error;
};

// -- forward model ------------------------------------------------------------

class InvalidForcing : public Error {
public:
    using Error::Error;
};

// -- objective ----------------------------------------------------------------

class ZeroVarianceObs : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class MissingBackground : public Error {
public:
    using Error::Error;
};

// -- regional mapping ---------------------------------------------------------

class OutOfOpenInterval : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class PriorOnBound : public Error {
public:
    using Error::Error;
};

// -- optimization -------------------------------------------------------------

class NonFiniteCost : public Error {
public:
    using Error::Error;
};

// -- Bayesian estimator -------------------------------------------------------

class NonPositiveJmin : public Error {
public:
    using Error::Error;
};

class DegenerateWeights : public Error {
public:
    using Error::Error;
};

// -- experiment harness -------------------------------------------------------

class SpecInvalid : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace hydrocal

#endif
