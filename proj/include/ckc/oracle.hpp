#pragma once

#include <vector>

#include "ckc/kinematics.hpp"
#include "ckc/semidiagonal.hpp"

namespace ckc {

/// Three views of the same closure question, evaluated independently for
/// one angle vector: the endpoint test, membership of the induced
/// parameters, and the triangle system on the diagonals (with the outermost
/// diagonal pinned to a_n by the closing circle). For configurations on or
/// near the circular set all three must agree.
struct ConsistencyReport {
    double residual = 0.0;
    bool circular = false;
    bool in_region = false;
    bool diagonals_ok = false;

    bool consistent() const {
        return circular == in_region && in_region == diagonals_ok;
    }
};

/// Evaluates the three views at tolerance tol (residual bound and
/// membership margin alike). beta must have n-1 entries.
ConsistencyReport check_consistency(const ChainSpec& chain, const AngleVector& beta,
                             double tol);

/// For a vector inside the nested-root region, verifies that every
/// discriminant along the recursion is nonnegative up to rounding and that
/// the outermost one collapses to a_n^2 exactly (up to rounding). Raises
/// domain_error when the vector is not in the region.
bool check_discriminants(const SemiDiagonalVector& c);

/// Brute-force search: every point of the uniform grid on (-pi, pi]^(n-1)
/// whose circular residual is at most tol, in lexicographic grid order.
/// Refuses n > 5 (cost_guard_error) and resolution < 8
/// (invalid_parameter_error). Runs grid slices in parallel; output is
/// identical to the serial reference.
std::vector<AngleVector> grid_circular_configs(const ChainSpec& chain,
                                               std::size_t resolution, double tol);

/// Brute-force minimum of the cross term over m grid angles, 2 <= m <= 4.
/// The first angle is held at the first grid value: shifting all angles by
/// whole grid steps maps the grid onto itself and leaves the cross term
/// unchanged, so the slice attains the full-grid minimum exactly.
/// Converges to the qa_bounds lower limit from above as resolution grows.
double min_x_grid(const ChainSpec& chain, std::size_t m, std::size_t resolution);

namespace serial {
/// Reference implementations of the grid searches, plain loop nests.
std::vector<AngleVector> grid_circular_configs(const ChainSpec& chain,
                                               std::size_t resolution, double tol);
double min_x_grid(const ChainSpec& chain, std::size_t m, std::size_t resolution);
}  // namespace serial

/// Default residual tolerance for a grid of the given resolution: one grid
/// step of angular drift moves the squared endpoint norm by at most about
/// this much.
double grid_tolerance(const ChainSpec& chain, std::size_t resolution);

}  // namespace ckc
