#pragma once

#include <stdexcept>
#include <string>

namespace ckc {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A vector length or index does not match the chain it is used with.
class dimension_error : public error {
public:
    using error::error;
};

/// Chain construction rejected: fewer than four links or a non-positive length.
class invalid_chain_error : public error {
public:
    using error::error;
};

/// The chain cannot close (one link is longer than all others combined),
/// so configuration sampling is refused.
class infeasible_chain_error : public error {
public:
    using error::error;
};

/// The planar angle of the zero vector was requested.
class degenerate_phase_error : public error {
public:
    using error::error;
};

/// A quantity that must be a squared length came out negative beyond
/// rounding tolerance.
class numeric_domain_error : public error {
public:
    using error::error;
};

/// An argument is outside the range an operation accepts.
class invalid_parameter_error : public error {
public:
    using error::error;
};

/// A semi-diagonal vector violates the nested root system beyond tolerance.
class invalid_semidiagonal_error : public error {
public:
    using error::error;
};

/// A prefix of the chain has collapsed onto the origin, so its phase does
/// not determine the next joint angle.
class degenerate_diagonal_error : public error {
public:
    using error::error;
};

/// A parameter vector lies outside the admissible region.
class domain_error : public error {
public:
    using error::error;
};

/// Rejection sampling gave up: the acceptance ratio fell below the floor.
class sampling_exhausted_error : public error {
public:
    using error::error;
};

/// A brute-force routine was asked for a problem size it refuses to attempt.
class cost_guard_error : public error {
public:
    using error::error;
};

/// A file could not be read, written, or parsed.
class io_error : public error {
public:
    using error::error;
};

}  // namespace ckc
