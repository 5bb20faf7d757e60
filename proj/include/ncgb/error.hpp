#pragma once

#include <stdexcept>
#include <string>

namespace ncgb {

/// Base class for every error raised by the library. Violated
/// preconditions (bad input) surface as `Error`; broken internal
/// invariants surface as `InvariantError`.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace ncgb
