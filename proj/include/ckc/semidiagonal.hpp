#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ckc/chain.hpp"

namespace ckc {

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// C_n = (a_n^2 - sum_squares(n-1)) / 2, the value the cross term of a full
/// angle prefix must take for the endpoint to lie on the closing circle.
double cn_constant(const ChainSpec& chain);

/// Semi-diagonal parameters C_3..C_{n-1} of a chain. Entry j-3 holds C_j;
/// C_j equals the cross term of the first j-1 angles once a configuration
/// realizes the vector. The two conventional extremes are folded into
/// at_subscript: C_2 is identically 0 and C_n is the chain constant.
class SemiDiagonalVector {
public:
    SemiDiagonalVector(ChainSpec chain, std::vector<double> entries);

    const ChainSpec& chain() const { return chain_; }
    const std::vector<double>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// C_j for 2 <= j <= n.
    double at_subscript(std::size_t j) const;

private:
    ChainSpec chain_;
    std::vector<double> entries_;
    double cn_ = 0.0;
};

/// Differences U_3..U_{n-1} of consecutive semi-diagonal parameters,
/// shifted so the admissible box becomes symmetric around zero:
/// U_j = C_j - C_{j+1} - a_j^2. Entry j-3 holds U_j; at_subscript(n)
/// returns the chain constant C_n.
class UVector {
public:
    UVector(ChainSpec chain, std::vector<double> entries);

    const ChainSpec& chain() const { return chain_; }
    const std::vector<double>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// U_j for 3 <= j <= n.
    double at_subscript(std::size_t j) const;

private:
    ChainSpec chain_;
    std::vector<double> entries_;
    double cn_ = 0.0;
};

/// A point of the cube [-1, 1]^(n-3). Coordinate k-1 steers U_{n-k}, so
/// the first coordinate belongs to the joint next to the closing link and
/// the last one to joint 3.
class CubePoint {
public:
    explicit CubePoint(std::vector<double> coords);
    CubePoint(std::initializer_list<double> coords)
        : CubePoint(std::vector<double>(coords)) {}

    const std::vector<double>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    double operator[](std::size_t idx0) const { return coords_[idx0]; }

private:
    std::vector<double> coords_;
};

/// Roots of the step-k quadratic E_k at upper value c: the interval
/// c + a_{n-k}^2 -+ a_{n-k} sqrt(2c + sum_squares(n-k)) that the next
/// parameter C_{n-k} may occupy. 1 <= k <= n-3. A discriminant within
/// nonneg_tol of zero clamps to zero; lower raises invalid_parameter_error.
Interval roots(const ChainSpec& chain, double c_upper, std::size_t k);

/// Reachability bounds for C_subscript, 3 <= subscript <= n-1: with
/// m = subscript - 1, the cross term of m links spans
/// [(d_min^2 - sum_squares(m)) / 2, sum over i < j <= m of a_i a_j] where
/// d_min = max(0, 2 max_i a_i - sum_i a_i) is the shortest distance the
/// m-link prefix can reach.
Interval qa_bounds(const ChainSpec& chain, std::size_t subscript);

/// Affine change of variables between C and U space (exact inverses).
UVector u_from_c(const SemiDiagonalVector& c);
SemiDiagonalVector c_from_u(const UVector& u);

/// t_k = 2 (U_{n-1} + ... + U_{n-k+1}) + a_n^2 + ... + a_{n-k+1}^2, the
/// squared half-width scale bounding |U_{n-k}|. u_prefix lists
/// U_{n-1}, ..., U_{n-k+1} in that order (k-1 values); t_1 = a_n^2.
double t_eval(const ChainSpec& chain, const std::vector<double>& u_prefix,
              std::size_t k);

/// The cube parametrization: walks k = 1..n-3 assigning
/// U_{n-k} = s_k a_{n-k} sqrt(t_k). Every output satisfies the nested
/// root system by construction.
UVector cube_to_u(const ChainSpec& chain, const CubePoint& s);

/// Left inverse of cube_to_u. Where t_k vanishes the whole coordinate
/// range collapses to U_{n-k} = 0 and s_k is reported as 0.
CubePoint u_to_cube(const UVector& u);

/// Membership in the nested-root region. margin widens each interval on
/// both ends; the default accepts boundary points up to rounding.
bool in_sd(const SemiDiagonalVector& c);
bool in_sd(const SemiDiagonalVector& c, double margin);

/// Membership in the reachability box given by qa_bounds.
bool in_q(const SemiDiagonalVector& c);
bool in_q(const SemiDiagonalVector& c, double margin);

class substream;

/// One accepted draw from the uniform distribution on the cube, restricted
/// to parameters inside the reachability box. Deterministic in
/// (seed, index); also returns how many cube points were drawn.
std::pair<SemiDiagonalVector, std::uint64_t> draw_semidiagonal(
    const ChainSpec& chain, std::uint64_t seed, std::uint64_t index);

/// Same, drawing from an existing stream. The stream is left positioned
/// right after the accepted cube point so callers can draw follow-up
/// decisions for the accepted sample from it.
std::pair<SemiDiagonalVector, std::uint64_t> draw_semidiagonal(
    const ChainSpec& chain, substream& rng);

/// Hard cap on rejection draws for one item. Hitting it means the observed
/// acceptance ratio is below 1e-6 with overwhelming likelihood, which is
/// treated as exhaustion.
inline constexpr std::uint64_t max_draws_per_item = 10'000'000;

struct SampleCsResult {
    std::vector<SemiDiagonalVector> values;
    std::uint64_t total_draws = 0;

    double acceptance_ratio() const {
        return total_draws == 0
                   ? 0.0
                   : static_cast<double>(values.size()) /
                         static_cast<double>(total_draws);
    }
};

/// count accepted draws, one substream per output index. Requires a
/// closure-feasible chain. Runs the indices in parallel; results are
/// identical to the serial reference for any thread count.
SampleCsResult sample_cs(const ChainSpec& chain, std::uint64_t seed,
                         std::size_t count);

namespace serial {
/// Reference implementation of ckc::sample_cs, one plain loop.
SampleCsResult sample_cs(const ChainSpec& chain, std::uint64_t seed,
                         std::size_t count);
}  // namespace serial

}  // namespace ckc
