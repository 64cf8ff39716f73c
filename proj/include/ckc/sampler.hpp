#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ckc/kinematics.hpp"
#include "ckc/semidiagonal.hpp"

namespace ckc {

/// Width of the band around +-1 inside which an arcsine argument is treated
/// as rounding noise and clamped. Arguments further out are rejected.
inline constexpr double arcsin_clamp_band = 1e-9;

/// Branch choices for the angle recursion, one bit per joint 2..n-1.
/// Bit 0 selects the arcsine preimage itself, bit 1 the mirrored preimage.
class OrientationVector {
public:
    explicit OrientationVector(std::vector<std::uint8_t> bits);

    static OrientationVector zeros(std::size_t m);
    /// Entry b takes bit b of mask, so masks 0..2^m-1 enumerate all vectors.
    static OrientationVector from_mask(std::size_t m, std::uint64_t mask);
    /// Parses "0110"-style strings; character i is the bit for joint i+2.
    static OrientationVector from_string(const std::string& text);

    std::size_t size() const { return bits_.size(); }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    /// Bit for joint j, 2 <= j <= size()+1.
    int bit_for_subscript(std::size_t j) const;
    std::string to_string() const;

private:
    std::vector<std::uint8_t> bits_;
};

/// The two preimages of a sine equation: with s = arcsin(ratio) and prefix
/// phase phi, the joint angle is pi*eps + (-1)^eps * s - phi, normalized.
double solve_angle(double arcsine, double phi, int eps_bit);

/// arcsin of the ratio (C_{n-k+1} - C_{n-k}) / (a_{n-k} L) where
/// L = sqrt(sum_squares(n-k-1) + 2 C_{n-k}) is the prefix diagonal,
/// 1 <= k <= n-2. A vanishing diagonal raises degenerate_diagonal_error;
/// a ratio beyond the clamp band raises invalid_semidiagonal_error.
double arcsin_ratio(const SemiDiagonalVector& c, std::size_t k);

/// Builds the circular configuration that realizes c with the given branch
/// bits, first angle free. Requires c inside the admissible region
/// (in_sd and in_q), otherwise domain_error.
CircularConfiguration circular_config(const SemiDiagonalVector& c,
                                      const OrientationVector& eps,
                                      double beta1 = 0.0);

/// Rotates a circular configuration so the endpoint lands on (a_n, 0).
ClosedConfiguration close_config(const ChainSpec& chain,
                                 const CircularConfiguration& circ);

/// How branch bits are chosen for sampled configurations.
struct EpsPolicy {
    enum class Kind { fixed, random, all };
    Kind kind = Kind::random;
    std::optional<OrientationVector> fixed_bits;

    static EpsPolicy fixed(OrientationVector bits);
    static EpsPolicy random();
    /// Emits every one of the 2^(n-2) branch variants per parameter draw.
    /// Guarded to n - 2 <= 16.
    static EpsPolicy all();
};

struct SampleOptions {
    std::uint64_t seed = 0;
    std::size_t count = 1;
    EpsPolicy eps = EpsPolicy::random();
    double beta1 = 0.0;
    bool close = false;
};

struct ConfigSample {
    SemiDiagonalVector c;
    OrientationVector eps;
    CircularConfiguration circular;
    std::optional<ClosedConfiguration> closed;
};

struct SampleBatch {
    std::vector<ConfigSample> samples;
    std::uint64_t total_draws = 0;
};

/// Draws count parameter vectors (sharing streams with sample_cs, so the
/// parameters match it draw for draw) and realizes each as one
/// configuration, or as all branch variants under EpsPolicy::all. Runs the
/// draws in parallel; output is identical to the serial reference.
SampleBatch sample_configs(const ChainSpec& chain, const SampleOptions& options);

namespace serial {
/// Reference implementation of ckc::sample_configs, one plain loop.
SampleBatch sample_configs(const ChainSpec& chain, const SampleOptions& options);
}  // namespace serial

struct PathSample {
    std::size_t index = 0;
    /// Interpolation parameter in [0, 1].
    double t = 0.0;
    CubePoint s;
    SemiDiagonalVector c;
    /// False marks a gap: the interpolated parameters left the
    /// reachability box, so no configuration is attached.
    bool inside_q = false;
    std::optional<ClosedConfiguration> closed;
};

/// Walks the segment from one cube point to another in steps >= 2 equal
/// increments and realizes each admissible sample as a closed configuration
/// with fixed branch bits. Both endpoints must be admissible
/// (domain_error otherwise); interior gaps are reported, not dropped.
std::vector<PathSample> path_in_cube(const ChainSpec& chain, const CubePoint& from,
                                     const CubePoint& to, std::size_t steps,
                                     const OrientationVector& eps,
                                     double beta1 = 0.0);

}  // namespace ckc
