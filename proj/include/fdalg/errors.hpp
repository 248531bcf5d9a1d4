#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fdalg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatches, bad JSON, out-of-range parameters.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A result the library should never produce on valid input.
class InternalError : public Error {
public:
    using Error::Error;
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

/// Semisimple quotient needs a field extension. Carries the minimal
/// polynomial that failed to split into rational linear factors.
class NotSplitOverQ : public Error {
public:
    NotSplitOverQ(std::string poly, std::string what)
        : Error(std::move(what)), minimal_polynomial(std::move(poly)) {}
    std::string minimal_polynomial;
};

/// Deterministic search for a smaller right ideal ran out of candidates.
class ShrinkingStalled : public Error {
public:
    ShrinkingStalled(std::vector<std::string> log, std::string what)
        : Error(std::move(what)), search_log(std::move(log)) {}
    std::vector<std::string> search_log;
};

class WitnessNotFound : public Error {
public:
    using Error::Error;
};

/// A standing hypothesis of an operation does not hold for its input.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(std::string name, const std::string& detail)
        : Error(name + ": " + detail), hypothesis(std::move(name)) {}
    std::string hypothesis;
};

/// Raised where an operation requires a projective module and gets one
/// that is not.
class NotProjectiveError : public Error {
public:
    using Error::Error;
};

}  // namespace fdalg
