#pragma once

#include <stdexcept>
#include <string>

namespace lsa {

// Base for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad scalar strings, bad JSON, dimension mismatches.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct BadParameters : Error {
    explicit BadParameters(const std::string& msg) : Error(msg) {}
};

struct NotNilpotent : Error {
    explicit NotNilpotent(const std::string& msg) : Error(msg) {}
};

struct NotSolvable : Error {
    explicit NotSolvable(const std::string& msg) : Error(msg) {}
};

struct SeedNotRegular : Error {
    explicit SeedNotRegular(const std::string& msg) : Error(msg) {}
};

struct NotCartan : Error {
    explicit NotCartan(const std::string& msg) : Error(msg) {}
};

struct NotLeftSymmetric : Error {
    explicit NotLeftSymmetric(const std::string& msg) : Error(msg) {}
};

struct NotComplete : Error {
    explicit NotComplete(const std::string& msg) : Error(msg) {}
};

struct NotCanonical : Error {
    explicit NotCanonical(const std::string& msg) : Error(msg) {}
};

struct NotOneDimensional : Error {
    explicit NotOneDimensional(const std::string& msg) : Error(msg) {}
};

struct MaxIterations : Error {
    explicit MaxIterations(const std::string& msg) : Error(msg) {}
};

// Raised when an exact computation cannot finish inside Q(i); carries a
// printable description of the obstruction (e.g. the unfactored polynomial).
struct NumericFallback : Error {
    std::string detail;
    NumericFallback(const std::string& msg, std::string det)
        : Error(msg), detail(std::move(det)) {}
};

struct TemplateExhausted : Error {
    explicit TemplateExhausted(const std::string& msg) : Error(msg) {}
};

// A structure-constant system branch the elimination could not finish;
// surfaced instead of guessing.
struct SolverIncomplete : Error {
    explicit SolverIncomplete(const std::string& msg) : Error(msg) {}
};

} // namespace lsa
