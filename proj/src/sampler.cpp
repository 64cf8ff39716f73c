#include "ckc/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "ckc/rng.hpp"

namespace ckc {

OrientationVector::OrientationVector(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
    if (bits_.empty())
        throw dimension_error("orientation vector needs at least one bit");
    for (std::uint8_t b : bits_)
        if (b > 1)
            throw invalid_parameter_error("orientation entries must be 0 or 1");
}

OrientationVector OrientationVector::zeros(std::size_t m) {
    return OrientationVector(std::vector<std::uint8_t>(m, 0));
}

OrientationVector OrientationVector::from_mask(std::size_t m, std::uint64_t mask) {
    if (m > 63 || mask >= (std::uint64_t{1} << m))
        throw invalid_parameter_error("orientation mask has bits beyond entry " +
                                      std::to_string(m));
    std::vector<std::uint8_t> bits(m);
    for (std::size_t b = 0; b < m; ++b)
        bits[b] = static_cast<std::uint8_t>((mask >> b) & 1u);
    return OrientationVector(std::move(bits));
}

OrientationVector OrientationVector::from_string(const std::string& text) {
    std::vector<std::uint8_t> bits(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw invalid_parameter_error("orientation string must be 0s and 1s, got '" +
                                          text + "'");
        bits[i] = static_cast<std::uint8_t>(text[i] - '0');
    }
    return OrientationVector(std::move(bits));
}

int OrientationVector::bit_for_subscript(std::size_t j) const {
    if (j < 2 || j > bits_.size() + 1)
        throw dimension_error("orientation subscript " + std::to_string(j) +
                              " outside [2, " + std::to_string(bits_.size() + 1) + "]");
    return bits_[j - 2];
}

std::string OrientationVector::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = char('0' + bits_[i]);
    return s;
}

double solve_angle(double arcsine, double phi, int eps_bit) {
    if (eps_bit != 0 && eps_bit != 1)
        throw invalid_parameter_error("solve_angle: branch bit must be 0 or 1");
    return normalize_angle(eps_bit ? pi - arcsine - phi : arcsine - phi);
}

namespace {

struct ArcsinStep {
    bool degenerate = false;
    double value = 0.0;
};

// The sine-equation step for joint j = n-k: C_j fixes the prefix diagonal,
// and the difference to C_{j+1} fixes sin of the joint angle relative to
// the prefix phase. A vanishing diagonal leaves the angle undetermined.
ArcsinStep arcsin_step(const ChainSpec& chain, double cj, double cj1,
                       std::size_t j) {
    double arg = chain.sum_squares(j - 1) + 2.0 * cj;
    if (arg <= chain.nonneg_tol()) return {true, 0.0};
    double ratio = (cj1 - cj) / (chain.link(j) * std::sqrt(arg));
    if (std::fabs(ratio) > 1.0 + arcsin_clamp_band)
        throw invalid_semidiagonal_error("arcsine argument " + std::to_string(ratio) +
                                         " for joint " + std::to_string(j) +
                                         " is outside the clamp band");
    return {false, std::asin(std::clamp(ratio, -1.0, 1.0))};
}

// Angle recursion on raw buffers; beta_out must have n-1 slots. Both the
// public circular_config and the batch samplers run exactly this code.
void raw_circular(const ChainSpec& chain, const std::vector<double>& c_asc,
                  const std::vector<std::uint8_t>& eps_bits, double beta1,
                  std::vector<double>& beta_out) {
    std::size_t n = chain.size();
    double cn = cn_constant(chain);
    auto c_at = [&](std::size_t j) {
        return j == 2 ? 0.0 : (j == n ? cn : c_asc[j - 3]);
    };

    double b1 = normalize_angle(beta1);
    beta_out[0] = b1;
    double ax = chain.link(1) * std::sin(b1);  // running sum of a_j sin
    double bx = chain.link(1) * std::cos(b1);  // running sum of a_j cos

    for (std::size_t k = n - 2; k >= 1; --k) {
        std::size_t j = n - k;
        double cj = c_at(j), cj1 = c_at(j + 1);
        ArcsinStep step = arcsin_step(chain, cj, cj1, j);
        double bj;
        if (step.degenerate) {
            // The prefix has folded onto the origin, so the joint angle is
            // free; that is only coherent when the parameter stalls.
            if (std::fabs(cj1 - cj) > chain.circular_tol())
                throw invalid_semidiagonal_error(
                    "degenerate diagonal at joint " + std::to_string(j) +
                    " but C_" + std::to_string(j + 1) + " - C_" + std::to_string(j) +
                    " = " + std::to_string(cj1 - cj));
            bj = 0.0;
        } else {
            double phi = std::atan2(bx, ax);
            bj = solve_angle(step.value, phi, eps_bits[j - 2]);
        }
        beta_out[j - 1] = bj;
        ax += chain.link(j) * std::sin(bj);
        bx += chain.link(j) * std::cos(bj);
    }
}

CircularConfiguration realize_circular(const ChainSpec& chain,
                                       const std::vector<double>& c_asc,
                                       const OrientationVector& eps, double beta1) {
    std::vector<double> beta(chain.size() - 1);
    raw_circular(chain, c_asc, eps.bits(), beta1, beta);
    AngleVector bv(std::move(beta));
    double res = circular_residual(chain, bv);
    if (res > chain.circular_tol())
        throw error("internal: circular residual " + std::to_string(res) +
                    " exceeds tolerance " + std::to_string(chain.circular_tol()));
    return {std::move(bv), res};
}

}  // namespace

double arcsin_ratio(const SemiDiagonalVector& c, std::size_t k) {
    const ChainSpec& chain = c.chain();
    std::size_t n = chain.size();
    if (k < 1 || k > n - 2)
        throw dimension_error("arcsin_ratio: k = " + std::to_string(k) +
                              " outside [1, " + std::to_string(n - 2) + "]");
    std::size_t j = n - k;
    ArcsinStep step = arcsin_step(chain, c.at_subscript(j), c.at_subscript(j + 1), j);
    if (step.degenerate)
        throw degenerate_diagonal_error("arcsin_ratio: diagonal before joint " +
                                        std::to_string(j) + " vanishes");
    return step.value;
}

CircularConfiguration circular_config(const SemiDiagonalVector& c,
                                      const OrientationVector& eps, double beta1) {
    const ChainSpec& chain = c.chain();
    if (eps.size() != chain.size() - 2)
        throw dimension_error("circular_config: " + std::to_string(eps.size()) +
                              " branch bits for a chain of " +
                              std::to_string(chain.size()) + " links");
    if (!std::isfinite(beta1))
        throw invalid_parameter_error("circular_config: first angle must be finite");
    if (!in_sd(c) || !in_q(c))
        throw domain_error("circular_config: parameters outside the admissible region");
    return realize_circular(chain, c.entries(), eps, beta1);
}

ClosedConfiguration close_config(const ChainSpec& chain,
                                 const CircularConfiguration& circ) {
    Point2 e = endpoint(chain, circ.beta);
    if (e.x == 0.0 && e.y == 0.0)
        throw degenerate_phase_error("close_config: endpoint at the origin");
    AngleVector alpha = rotate(circ.beta, -e.angle());
    double res = closure_residual(chain, alpha);
    if (res > chain.closure_tol())
        throw error("internal: closure residual " + std::to_string(res) +
                    " exceeds tolerance " + std::to_string(chain.closure_tol()));
    return {std::move(alpha), res};
}

EpsPolicy EpsPolicy::fixed(OrientationVector bits) {
    return {Kind::fixed, std::move(bits)};
}
EpsPolicy EpsPolicy::random() { return {Kind::random, std::nullopt}; }
EpsPolicy EpsPolicy::all() { return {Kind::all, std::nullopt}; }

namespace {

std::size_t variants_per_draw(const ChainSpec& chain, const SampleOptions& options) {
    std::size_t m = chain.size() - 2;
    switch (options.eps.kind) {
        case EpsPolicy::Kind::all:
            if (m > 16)
                throw cost_guard_error("branch enumeration over 2^" + std::to_string(m) +
                                       " variants refused (limit 2^16)");
            return std::size_t{1} << m;
        case EpsPolicy::Kind::fixed:
            if (!options.eps.fixed_bits || options.eps.fixed_bits->size() != m)
                throw dimension_error("fixed branch bits must have n-2 = " +
                                      std::to_string(m) + " entries");
            return 1;
        case EpsPolicy::Kind::random:
            return 1;
    }
    throw invalid_parameter_error("unknown branch policy");
}

void check_sample_options(const ChainSpec& chain, const SampleOptions& options) {
    if (!chain.closure_feasible())
        throw infeasible_chain_error("sample_configs: chain cannot close");
    if (!std::isfinite(options.beta1))
        throw invalid_parameter_error("sample_configs: first angle must be finite");
    variants_per_draw(chain, options);
}

// All configurations for one draw index, written to slots[index*block ...].
// Slot layout is fixed up front, so the batch output does not depend on
// scheduling.
std::uint64_t emit_index(const ChainSpec& chain, const SampleOptions& options,
                         std::size_t block, std::size_t index,
                         std::vector<std::optional<ConfigSample>>& slots) {
    substream rng(options.seed, index);
    auto [c, draws] = draw_semidiagonal(chain, rng);

    auto realize = [&](OrientationVector eps, std::size_t slot) {
        CircularConfiguration circ =
            realize_circular(chain, c.entries(), eps, options.beta1);
        std::optional<ClosedConfiguration> closed;
        if (options.close) closed = close_config(chain, circ);
        slots[slot] = ConfigSample{c, std::move(eps), std::move(circ), std::move(closed)};
    };

    std::size_t m = chain.size() - 2;
    switch (options.eps.kind) {
        case EpsPolicy::Kind::all:
            for (std::uint64_t mask = 0; mask < block; ++mask)
                realize(OrientationVector::from_mask(m, mask), index * block + mask);
            break;
        case EpsPolicy::Kind::fixed:
            realize(*options.eps.fixed_bits, index);
            break;
        case EpsPolicy::Kind::random: {
            std::vector<std::uint8_t> bits(m);
            for (std::uint8_t& b : bits) b = static_cast<std::uint8_t>(rng.bit());
            realize(OrientationVector(std::move(bits)), index);
            break;
        }
    }
    return draws;
}

SampleBatch assemble(std::vector<std::optional<ConfigSample>>& slots,
                     std::uint64_t total_draws) {
    SampleBatch batch;
    batch.total_draws = total_draws;
    batch.samples.reserve(slots.size());
    for (std::optional<ConfigSample>& slot : slots) {
        if (!slot) throw error("internal: sample slot left empty");
        batch.samples.push_back(std::move(*slot));
    }
    return batch;
}

}  // namespace

namespace serial {

SampleBatch sample_configs(const ChainSpec& chain, const SampleOptions& options) {
    check_sample_options(chain, options);
    std::size_t block = variants_per_draw(chain, options);
    std::vector<std::optional<ConfigSample>> slots(options.count * block);
    std::uint64_t total_draws = 0;
    for (std::size_t i = 0; i < options.count; ++i)
        total_draws += emit_index(chain, options, block, i, slots);
    return assemble(slots, total_draws);
}

}  // namespace serial

SampleBatch sample_configs(const ChainSpec& chain, const SampleOptions& options) {
    check_sample_options(chain, options);
    std::size_t block = variants_per_draw(chain, options);
    std::vector<std::optional<ConfigSample>> slots(options.count * block);
    std::vector<std::uint64_t> draws(options.count, 0);
    std::vector<std::exception_ptr> errors(options.count);

#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(options.count); ++i) {
        try {
            draws[i] = emit_index(chain, options, block, static_cast<std::size_t>(i), slots);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }

    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    std::uint64_t total_draws = 0;
    for (std::uint64_t d : draws) total_draws += d;
    return assemble(slots, total_draws);
}

std::vector<PathSample> path_in_cube(const ChainSpec& chain, const CubePoint& from,
                                     const CubePoint& to, std::size_t steps,
                                     const OrientationVector& eps, double beta1) {
    std::size_t n = chain.size();
    if (from.size() != n - 3 || to.size() != n - 3)
        throw dimension_error("path_in_cube: cube points need n-3 = " +
                              std::to_string(n - 3) + " coordinates");
    if (eps.size() != n - 2)
        throw dimension_error("path_in_cube: branch bits need n-2 entries");
    if (steps < 2)
        throw invalid_parameter_error("path_in_cube: need at least 2 steps");

    auto params_at = [&](const CubePoint& s) { return c_from_u(cube_to_u(chain, s)); };
    if (!in_q(params_at(from)))
        throw domain_error("path_in_cube: start point outside the reachability box");
    if (!in_q(params_at(to)))
        throw domain_error("path_in_cube: end point outside the reachability box");

    std::vector<PathSample> out;
    out.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        std::vector<double> coords(n - 3);
        for (std::size_t d = 0; d < n - 3; ++d)
            coords[d] = (1.0 - t) * from[d] + t * to[d];
        CubePoint s(std::move(coords));
        SemiDiagonalVector c = params_at(s);
        bool ok = in_q(c);
        std::optional<ClosedConfiguration> closed;
        if (ok) closed = close_config(chain, circular_config(c, eps, beta1));
        out.push_back(PathSample{i, t, std::move(s), std::move(c), ok, std::move(closed)});
    }
    return out;
}

}  // namespace ckc
