#pragma once

#include <stdexcept>
#include <string>

namespace graphaug {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInputError : Error {
    using Error::Error;
};

struct InvalidNodeError : Error {
    using Error::Error;
};

struct RewireConflictError : Error {
    using Error::Error;
};

struct NoCandidateError : Error {
    using Error::Error;
};

struct AttemptsExhaustedError : Error {
    using Error::Error;
};

struct AugmentationFailedError : Error {
    using Error::Error;
};

struct DegenerateSpectrumError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

struct ConsistencyError : Error {
    using Error::Error;
};

struct StratificationError : Error {
    using Error::Error;
};

struct LabelError : Error {
    using Error::Error;
};

struct UndefinedGainError : Error {
    using Error::Error;
};

}  // namespace graphaug
