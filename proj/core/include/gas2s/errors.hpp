#pragma once

#include <stdexcept>
#include <string>

namespace gas2s {

// Bad argument values or misuse of an API contract.
class ArgError : public std::runtime_error {
public:
    explicit ArgError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data (datasets, config files, checkpoints).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor shape incompatibility; message names both shapes.
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / I/O failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gas2s
