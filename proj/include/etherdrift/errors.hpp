#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etherdrift {

/// Base of every error thrown by the library. `kind()` is a stable short tag
/// used in machine-readable error reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual std::string_view kind() const noexcept = 0;
};

/// An input lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    DomainError(std::string parameter, const std::string& message)
        : Error(parameter + ": " + message), parameter_(std::move(parameter)) {}

    [[nodiscard]] std::string_view kind() const noexcept override { return "domain"; }
    [[nodiscard]] const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

class DimensionError : public Error {
public:
    using Error::Error;
    [[nodiscard]] std::string_view kind() const noexcept override { return "dimension"; }
};

/// Malformed or inconsistent input data (sample series, paths, ...).
class InputError : public Error {
public:
    using Error::Error;
    [[nodiscard]] std::string_view kind() const noexcept override { return "input"; }
};

class SingularityError : public Error {
public:
    using Error::Error;
    [[nodiscard]] std::string_view kind() const noexcept override { return "singularity"; }
};

class ConvergenceError : public Error {
public:
    using Error::Error;
    [[nodiscard]] std::string_view kind() const noexcept override { return "convergence"; }
};

class DegenerateConfigError : public Error {
public:
    using Error::Error;
    [[nodiscard]] std::string_view kind() const noexcept override { return "degenerate"; }
};

class OverflowError : public Error {
public:
    using Error::Error;
    [[nodiscard]] std::string_view kind() const noexcept override { return "overflow"; }
};

}  // namespace etherdrift
