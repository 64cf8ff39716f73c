#include "ckc/kinematics.hpp"

#include <cmath>
#include <string>

namespace ckc {

namespace {

void check_prefix(const ChainSpec& chain, const AngleVector& beta,
                  const char* op) {
    if (beta.size() > chain.size())
        throw dimension_error(std::string(op) + ": " + std::to_string(beta.size()) +
                              " angles for a chain of " +
                              std::to_string(chain.size()) + " links");
}

}  // namespace

SinCosCombination combine_sin_cos(double a, double b) {
    if (a == 0.0 && b == 0.0)
        throw degenerate_phase_error("combine_sin_cos: zero input has no phase");
    return {std::hypot(a, b), normalize_angle(std::atan2(b, a))};
}

Point2 endpoint(const ChainSpec& chain, const AngleVector& beta) {
    check_prefix(chain, beta, "endpoint");
    Point2 p;
    for (std::size_t j = 1; j <= beta.size(); ++j) {
        p.x += chain.link(j) * std::cos(beta.at(j));
        p.y += chain.link(j) * std::sin(beta.at(j));
    }
    return p;
}

double cross_term(const ChainSpec& chain, const AngleVector& beta) {
    check_prefix(chain, beta, "cross_term");
    double x = 0.0;
    for (std::size_t i = 1; i < beta.size(); ++i)
        for (std::size_t j = i + 1; j <= beta.size(); ++j)
            x += chain.link(i) * chain.link(j) * std::cos(beta.at(i) - beta.at(j));
    return x;
}

double phase(const ChainSpec& chain, const AngleVector& beta) {
    check_prefix(chain, beta, "phase");
    Point2 p = endpoint(chain, beta);
    if (p.x == 0.0 && p.y == 0.0)
        throw degenerate_phase_error("phase: chain prefix collapsed onto the origin");
    // The phase pairs sine coefficients with x and cosine coefficients
    // with y, so it is the angle of (sum a sin, sum a cos) = (p.y, p.x).
    return normalize_angle(std::atan2(p.x, p.y));
}

double diagonal_length(const ChainSpec& chain, const AngleVector& beta) {
    check_prefix(chain, beta, "diagonal_length");
    double sq = chain.sum_squares(beta.size()) + 2.0 * cross_term(chain, beta);
    if (sq < 0.0) {
        if (sq < -chain.nonneg_tol())
            throw numeric_domain_error("diagonal_length: squared length " +
                                       std::to_string(sq) + " is negative");
        sq = 0.0;
    }
    return std::sqrt(sq);
}

double circular_residual(const ChainSpec& chain, const AngleVector& beta) {
    if (beta.size() != chain.size() - 1)
        throw dimension_error("circular_residual: need exactly n-1 angles");
    double an = chain.link(chain.size());
    return std::fabs(endpoint(chain, beta).norm_sq() - an * an);
}

double closure_residual(const ChainSpec& chain, const AngleVector& beta) {
    if (beta.size() != chain.size() - 1)
        throw dimension_error("closure_residual: need exactly n-1 angles");
    Point2 p = endpoint(chain, beta);
    return std::hypot(p.x - chain.link(chain.size()), p.y);
}

AngleVector rotate(const AngleVector& beta, double lambda) {
    std::vector<double> out(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i)
        out[i] = beta[i] + lambda;
    return AngleVector(std::move(out));
}

}  // namespace ckc
