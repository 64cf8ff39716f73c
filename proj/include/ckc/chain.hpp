#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ckc/angle.hpp"
#include "ckc/errors.hpp"

namespace ckc {

/// Relative tolerance for closure residuals. Scaled by the squared total
/// length for squared-norm residuals and by the total length for distance
/// residuals.
inline constexpr double closure_rel_tol = 1e-9;

/// Relative slack allowed before a nominally nonnegative squared length is
/// treated as a hard domain violation. Also the boundary margin for region
/// membership tests. Scaled by the squared total length.
inline constexpr double nonneg_rel_tol = 1e-12;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
    /// Planar angle in (-pi, pi]; (0, 0) has no angle and must be guarded
    /// by the caller.
    double angle() const { return normalize_angle(std::atan2(y, x)); }
};

/// A planar closed chain: ordered link lengths a_1..a_n. The last link is
/// the one pinned to the positive x axis when a configuration is closed.
class ChainSpec {
public:
    explicit ChainSpec(std::vector<double> links);
    ChainSpec(std::initializer_list<double> links)
        : ChainSpec(std::vector<double>(links)) {}

    std::size_t size() const { return links_.size(); }
    const std::vector<double>& links() const { return links_; }

    /// Link length a_i, 1-based to match the construction's subscripts.
    double link(std::size_t i) const { return links_[i - 1]; }

    /// Sum of squared link lengths a_1^2 + ... + a_m^2, 1 <= m <= n.
    double sum_squares(std::size_t m) const;

    double total_length() const { return total_; }
    double max_link() const { return max_link_; }

    /// True when no link is longer than all the others combined, the
    /// condition for the chain to close at all.
    bool closure_feasible() const { return feasible_; }

    /// Absolute tolerance for squared-norm residuals (circular closure).
    double circular_tol() const { return closure_rel_tol * total_ * total_; }
    /// Absolute tolerance for distance residuals (full closure).
    double closure_tol() const { return closure_rel_tol * total_; }
    /// Absolute slack for nonnegativity checks and region boundaries.
    double nonneg_tol() const { return nonneg_rel_tol * total_ * total_; }

private:
    std::vector<double> links_;
    std::vector<double> sq_prefix_;  // sq_prefix_[m] = sum of a_i^2, i <= m
    double total_ = 0.0;
    double max_link_ = 0.0;
    bool feasible_ = false;
};

/// Joint angles measured against the positive x axis, stored normalized to
/// (-pi, pi]. Holds the first m angles of a chain, 1 <= m <= n-1; the
/// closing angle of the last link is never stored.
class AngleVector {
public:
    explicit AngleVector(std::vector<double> values);
    AngleVector(std::initializer_list<double> values)
        : AngleVector(std::vector<double>(values)) {}

    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    /// Angle beta_i, 1-based.
    double at(std::size_t i) const { return values_[i - 1]; }
    double operator[](std::size_t idx0) const { return values_[idx0]; }

private:
    std::vector<double> values_;
};

}  // namespace ckc
