#pragma once

#include <stdexcept>
#include <string>

namespace maass {

/// Base class for every error raised by the library.
class error : public std::runtime_error
{
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
    /// Short machine-readable tag used in structured error records.
    virtual const char* kind() const noexcept { return "error"; }
};

/// Argument outside the domain of a function (negative Bessel argument,
/// non-coprime modular inverse, point too close to the real line, ...).
class domain_error : public error
{
public:
    using error::error;
    const char* kind() const noexcept override { return "domain"; }
};

class overflow_error : public error
{
public:
    using error::error;
    const char* kind() const noexcept override { return "overflow"; }
};

/// A quadrature node or polylogarithm argument landed on (or next to) a pole.
class pole_error : public error
{
public:
    using error::error;
    const char* kind() const noexcept override { return "pole"; }
};

/// Evaluator called on the wrong half-plane.
class plane_error : public error
{
public:
    using error::error;
    const char* kind() const noexcept override { return "plane"; }
};

/// A truncation choice leaves a tail larger than the accepted budget.
class truncation_error : public error
{
public:
    using error::error;
    const char* kind() const noexcept override { return "truncation"; }
};

/// An internal invariant failed (non-real Kloosterman sum, runaway series).
class consistency_error : public error
{
public:
    using error::error;
    const char* kind() const noexcept override { return "consistency"; }
};

} // namespace maass
