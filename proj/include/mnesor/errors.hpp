#ifndef MNESOR_ERRORS_HPP
#define MNESOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mnesor {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when values from two different model instances are combined.
struct ModelMismatchError : Error {
    using Error::Error;
};

/// Syntax error in a granular or query expression. `pos` is a 0-based
/// character offset into the input; `expected` lists acceptable tokens.
struct ParseError : Error {
    std::size_t pos;
    std::vector<std::string> expected;

    ParseError(std::string msg, std::size_t position, std::vector<std::string> exp)
        : Error(std::move(msg)), pos(position), expected(std::move(exp)) {}
};

/// A name (table or granular) failed to resolve. `known` lists what would
/// have resolved.
struct ResolutionError : Error {
    std::vector<std::string> known;

    ResolutionError(std::string msg, std::vector<std::string> known_names)
        : Error(std::move(msg)), known(std::move(known_names)) {}
};

/// Malformed input data: bad CSV, duplicate keys, keys outside the
/// universe, merge conflicts.
struct DataError : Error {
    using Error::Error;
};

/// A required witness does not exist; the message names the violated
/// property.
struct AbsenceError : Error {
    using Error::Error;
};

/// An exhaustive check would enumerate more cases than the configured cap.
struct CapExceededError : Error {
    unsigned long long planned;

    CapExceededError(std::string msg, unsigned long long planned_cases)
        : Error(std::move(msg)), planned(planned_cases) {}
};

/// A counterexample does not belong to the model it is being replayed
/// against.
struct StaleCounterexampleError : Error {
    using Error::Error;
};

} // namespace mnesor

#endif
