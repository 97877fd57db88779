#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlgraph {

// Base of every error the library throws. The CLI maps the subclasses onto
// exit codes: validation-type errors -> 2, numerical/generation -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Input data that violates a structural contract (e.g. an asymmetric matrix).
class InvalidInput : public Error {
public:
    using Error::Error;
};

class GenerationFailure : public Error {
public:
    GenerationFailure(const std::string& what, std::size_t attempts)
        : Error(what), attempts_(attempts) {}
    std::size_t attempts() const noexcept { return attempts_; }

private:
    std::size_t attempts_;
};

class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

class NumericalFailure : public Error {
public:
    using Error::Error;
};

}  // namespace qlgraph
