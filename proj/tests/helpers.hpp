#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "ckc/angle.hpp"
#include "ckc/chain.hpp"
#include "ckc/rng.hpp"

namespace test_util {

inline ckc::ChainSpec unit_chain(std::size_t n) {
    return ckc::ChainSpec(std::vector<double>(n, 1.0));
}

// Compares angles on the circle, so pi and -pi count as equal.
inline void check_angle(double got, double want, double tol = 1e-12) {
    CAPTURE(got);
    CAPTURE(want);
    CHECK(ckc::angular_distance(got, want) <= tol);
}

inline void check_angles(const ckc::AngleVector& got,
                         const std::vector<double>& want, double tol = 1e-12) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) check_angle(got[i], want[i], tol);
}

// A chain with n links drawn from [0.5, 1.5], redrawn until no link exceeds
// 95% of the sum of the others. Deterministic in seed.
inline ckc::ChainSpec random_feasible_chain(std::size_t n, std::uint64_t seed) {
    ckc::substream rng(seed, 0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> links(n);
        double total = 0.0, biggest = 0.0;
        for (double& a : links) {
            a = 0.5 + rng.uniform01();
            total += a;
            biggest = std::max(biggest, a);
        }
        if (2.0 * biggest <= 0.95 * total) return ckc::ChainSpec(std::move(links));
    }
    REQUIRE(false);
    return unit_chain(n);
}

}  // namespace test_util
