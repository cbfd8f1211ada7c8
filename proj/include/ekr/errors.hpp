#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ekr {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct RangeError : Error {
    using Error::Error;
};

struct CardinalityError : Error {
    using Error::Error;
};

struct DuplicateError : Error {
    using Error::Error;
};

struct GroundMismatchError : Error {
    using Error::Error;
};

struct NotContainedError : Error {
    using Error::Error;
};

// Carries a pair of members whose intersection is too small.
struct WitnessPairError : Error {
    std::vector<int> witness_a;
    std::vector<int> witness_b;
    WitnessPairError(const std::string& msg, std::vector<int> a, std::vector<int> b)
        : Error(msg), witness_a(std::move(a)), witness_b(std::move(b)) {}
};

struct NotIntersectingError : WitnessPairError {
    using WitnessPairError::WitnessPairError;
};

struct NotBIntersectingError : WitnessPairError {
    using WitnessPairError::WitnessPairError;
};

struct BoundNotApplicableError : Error {
    using Error::Error;
};

struct ScaleError : Error {
    using Error::Error;
};

// Carries the observed set L of pairwise intersection sizes.
struct PreconditionError : Error {
    std::vector<int> observed_l;
    PreconditionError(const std::string& msg, std::vector<int> l)
        : Error(msg), observed_l(std::move(l)) {}
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace ekr
