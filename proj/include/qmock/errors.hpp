#pragma once

#include <stdexcept>
#include <string>

namespace qmock {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// series_invert: lowest coefficient is not a single term with coefficient +-1.
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

// series_compare: requested order exceeds the accuracy of an operand.
struct InsufficientAccuracy : Error {
    explicit InsufficientAccuracy(const std::string& what) : Error(what) {}
};

// sum_family: the valuation bound failed to clear the accuracy within the index cap.
struct NonTerminating : Error {
    explicit NonTerminating(const std::string& what) : Error(what) {}
};

// partial_theta: (P n^2 + Q n)/2 is not an integer for all n.
struct ParityViolation : Error {
    explicit ParityViolation(const std::string& what) : Error(what) {}
};

// classical(): no identity with that name.
struct UnknownName : Error {
    explicit UnknownName(const std::string& what) : Error(what) {}
};

// classical(): a required parameter is missing or violates a side condition.
struct BadParams : Error {
    explicit BadParams(const std::string& what) : Error(what) {}
};

// mock builders: arity mismatch or arguments without a sound valuation bound.
struct IllegalSpec : Error {
    explicit IllegalSpec(const std::string& what) : Error(what) {}
};

// registry: no entry with that id.
struct UnknownId : Error {
    explicit UnknownId(const std::string& what) : Error(what) {}
};

// registry: requested order is below the entry's declared minimum.
struct AccuracyTooLow : Error {
    explicit AccuracyTooLow(const std::string& what) : Error(what) {}
};

// malformed text/JSON input.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace qmock
