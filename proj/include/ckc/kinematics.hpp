#pragma once

#include "ckc/chain.hpp"

namespace ckc {

/// Amplitude/phase form of a sin x + b cos x: the pair (r, phi) with
/// a sin x + b cos x == r * sin(x + phi) for all x.
struct SinCosCombination {
    double amplitude = 0.0;
    double phase = 0.0;
};

/// Requires (a, b) != (0, 0); amplitude is hypot(a, b) and phase is the
/// planar angle of the point (a, b).
SinCosCombination combine_sin_cos(double a, double b);

/// Position of joint k after following links 1..k at the given angles,
/// starting from the origin. beta may be any prefix, 1 <= k <= n.
Point2 endpoint(const ChainSpec& chain, const AngleVector& beta);

/// X(beta^m): sum over i < j <= m of a_i a_j cos(beta_i - beta_j).
/// Zero for m = 1.
double cross_term(const ChainSpec& chain, const AngleVector& beta);

/// Phi(beta^m): planar angle of the point
/// (sum a_j sin beta_j, sum a_j cos beta_j). The zero point is the
/// caller's degenerate branch and raises degenerate_phase_error.
double phase(const ChainSpec& chain, const AngleVector& beta);

/// L(beta^m) = |endpoint|, computed via the identity
/// L^2 = sum_squares(m) + 2 X(beta^m). Values in [-nonneg_tol, 0) clamp
/// to zero; anything lower raises numeric_domain_error.
double diagonal_length(const ChainSpec& chain, const AngleVector& beta);

/// | |endpoint(beta^{n-1})|^2 - a_n^2 |, the defect of lying on the circle
/// the last link can close from. beta must have exactly n-1 entries.
double circular_residual(const ChainSpec& chain, const AngleVector& beta);

/// Distance from endpoint(beta^{n-1}) to (a_n, 0), the defect of the chain
/// being closed with the last link on the positive x axis.
double closure_residual(const ChainSpec& chain, const AngleVector& beta);

/// Rigid rotation: adds lambda to every angle and renormalizes.
AngleVector rotate(const AngleVector& beta, double lambda);

/// Angles whose endpoint lies on the circle of radius a_n around the
/// origin, up to the stored residual.
struct CircularConfiguration {
    AngleVector beta;
    double residual = 0.0;
};

/// Angles whose endpoint is (a_n, 0), so the last link closes the loop
/// along the positive x axis.
struct ClosedConfiguration {
    AngleVector alpha;
    double residual = 0.0;
};

}  // namespace ckc
