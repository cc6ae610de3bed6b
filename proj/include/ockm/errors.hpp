#ifndef OCKM_ERRORS_HPP
#define OCKM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ockm {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input data or usage: maps to CLI exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

// Numerical failure during fitting or evaluation: maps to CLI exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

class MalformedRow : public DataError {
public:
    using DataError::DataError;
};

class NonNumericFeature : public DataError {
public:
    using DataError::DataError;
};

class EmptyFile : public DataError {
public:
    using DataError::DataError;
};

class UnknownTargetLabel : public DataError {
public:
    using DataError::DataError;
};

class DimensionMismatch : public DataError {
public:
    using DataError::DataError;
};

class TooFewSamples : public DataError {
public:
    using DataError::DataError;
};

class NoTargetSamples : public DataError {
public:
    using DataError::DataError;
};

class EmptyTestSet : public DataError {
public:
    using DataError::DataError;
};

class EmptyGrid : public DataError {
public:
    using DataError::DataError;
};

class MissingCells : public DataError {
public:
    using DataError::DataError;
};

class UnsupportedK : public DataError {
public:
    using DataError::DataError;
};

class VersionMismatch : public DataError {
public:
    using DataError::DataError;
};

class SingularSystem : public NumericError {
public:
    using NumericError::NumericError;
};

class DegenerateDenominator : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace ockm

#endif  // OCKM_ERRORS_HPP
