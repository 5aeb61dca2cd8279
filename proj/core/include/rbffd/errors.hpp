#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbffd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSpacing : public Error {
public:
    using Error::Error;
};

class InsufficientNodes : public Error {
public:
    using Error::Error;
};

/// Raised when the local saddle-point system of a stencil is (numerically) singular.
class DegenerateStencil : public Error {
public:
    DegenerateStencil(std::size_t center, const std::string& what)
        : Error(what), center_(center) {}

    [[nodiscard]] std::size_t center() const noexcept { return center_; }

private:
    std::size_t center_;
};

class AssemblyError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotConverged : public Error {
public:
    using Error::Error;
};

class FitError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace rbffd
