#pragma once

#include <cmath>
#include <numbers>

namespace ckc {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle to the canonical interval (-pi, pi].
inline double normalize_angle(double x) {
    double y = std::remainder(x, two_pi);
    if (y <= -pi) y += two_pi;
    return y;
}

/// Distance between two angles on the circle, in [0, pi].
/// normalize_angle maps -pi to pi, so representatives of the same point
/// always compare as zero.
inline double angular_distance(double x, double y) {
    return std::fabs(normalize_angle(x - y));
}

}  // namespace ckc
