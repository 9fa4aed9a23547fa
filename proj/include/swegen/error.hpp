#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swegen {

/// Base of every runtime failure raised by the toolkit. Precondition
/// violations use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A NaN or infinity was found in a field. `cell()` is the row-major index.
class NonFiniteError : public Error {
public:
    NonFiniteError(const std::string& what, std::size_t cell)
        : Error(what + " (cell " + std::to_string(cell) + ")"), cell_(cell) {}

    std::size_t cell() const noexcept { return cell_; }

private:
    std::size_t cell_;
};

/// Time integration could not continue (dt underflow, non-finite state).
class SolverError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace swegen
