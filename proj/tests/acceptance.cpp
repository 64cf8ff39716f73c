// End-to-end acceptance checks. Each criterion prints one line; the exit
// code is the number of failed criteria. Tolerances are pinned here and
// intentionally duplicated rather than referenced from the library.

#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "ckc/oracle.hpp"
#include "ckc/rng.hpp"
#include "ckc/sampler.hpp"

using namespace ckc;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

template <typename F>
void criterion(int number, const std::string& name, F&& body) {
    try {
        auto [ok, detail] = body();
        report(number, name, ok, detail);
    } catch (const std::exception& e) {
        report(number, name, false, std::string("exception: ") + e.what());
    }
}

ChainSpec random_feasible_chain(std::size_t n, std::uint64_t seed) {
    substream rng(seed, 0);
    while (true) {
        std::vector<double> links(n);
        double total = 0.0, biggest = 0.0;
        for (double& a : links) {
            a = 0.5 + rng.uniform01();
            total += a;
            biggest = std::max(biggest, a);
        }
        if (2.0 * biggest <= 0.95 * total) return ChainSpec(std::move(links));
    }
}

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

}  // namespace

int main() {
    // 1. Sampled configurations close, from small chains up to n = 50.
    criterion(1, "closure residuals at scale", [] {
        double worst_circ = 0.0, worst_closed = 0.0;
        for (std::size_t n : {4, 5, 6, 10, 50}) {
            std::vector<ChainSpec> chains;
            chains.push_back(ChainSpec(std::vector<double>(n, 1.0)));
            for (std::uint64_t s = 0; s < 5; ++s)
                chains.push_back(random_feasible_chain(n, 100 * n + s));
            for (std::size_t ci = 0; ci < chains.size(); ++ci) {
                const ChainSpec& chain = chains[ci];
                double scale = chain.total_length();
                SampleOptions opts;
                opts.seed = 7 * n + ci;
                opts.count = 10000;
                opts.close = true;
                SampleBatch batch = sample_configs(chain, opts);
                if (batch.samples.size() != opts.count)
                    return std::pair(false, std::string("short batch"));
                for (const ConfigSample& s : batch.samples) {
                    worst_circ = std::max(
                        worst_circ, s.circular.residual / (scale * scale));
                    worst_closed =
                        std::max(worst_closed, s.closed->residual / scale);
                }
            }
        }
        bool ok = worst_circ <= 1e-9 && worst_closed <= 1e-9;
        return std::pair(ok, "30 chains x 10^4 samples, worst relative "
                             "residuals " +
                                 fmt("%.2e (circular), ", worst_circ) +
                                 fmt("%.2e (closed)", worst_closed));
    });

    // 2. The cube map reproduces the closed-form unit 5-chain projection.
    criterion(2, "worked 5-link cube algebra", [] {
        ChainSpec c5{1.0, 1.0, 1.0, 1.0, 1.0};
        substream rng(2, 0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            double s1 = rng.uniform_pm1();
            double s2 = rng.uniform_pm1();
            SemiDiagonalVector c = c_from_u(cube_to_u(c5, CubePoint{s1, s2}));
            worst = std::max(worst, std::abs(c.at_subscript(4) - (s1 - 0.5)));
            worst = std::max(
                worst, std::abs(c.at_subscript(3) -
                                (s2 * std::sqrt(2.0 * s1 + 2.0) + s1 + 0.5)));
        }
        return std::pair(worst <= 1e-12,
                         "1000 points, worst deviation " + fmt("%.2e", worst));
    });

    // 3. Every branch vector realizes the same parameters on the circle.
    criterion(3, "branch completeness", [] {
        ChainSpec c6{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
        double worst = 0.0;
        for (std::uint64_t item = 0; item < 100; ++item) {
            auto [c, draws] = draw_semidiagonal(c6, 33, item);
            (void)draws;
            for (std::uint64_t mask = 0; mask < 16; ++mask) {
                CircularConfiguration cc =
                    circular_config(c, OrientationVector::from_mask(4, mask));
                worst = std::max(worst, cc.residual);
            }
        }
        double tol = 1e-9 * 36.0;  // squared total length of the unit 6-chain
        return std::pair(worst <= tol, "100 draws x 16 branch vectors, worst "
                                       "residual " +
                                           fmt("%.2e", worst));
    });

    // 4. The three closure views agree on grid hits and sampled configs.
    criterion(4, "closure report agreement", [] {
        std::size_t checked = 0, inconsistent = 0;

        ChainSpec c4{1.0, 1.0, 1.0, 1.0};
        double tol4 = grid_tolerance(c4, 90);
        for (const AngleVector& beta : grid_circular_configs(c4, 90, tol4)) {
            ++checked;
            ConsistencyReport r = check_consistency(c4, beta, tol4);
            if (!r.circular || !r.consistent()) ++inconsistent;
        }

        ChainSpec c5{1.0, 1.0, 1.0, 1.0, 1.0};
        double tol5 = grid_tolerance(c5, 24);
        for (const AngleVector& beta : grid_circular_configs(c5, 24, tol5)) {
            ++checked;
            ConsistencyReport r = check_consistency(c5, beta, tol5);
            if (!r.circular || !r.consistent()) ++inconsistent;
        }

        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            ChainSpec chain = random_feasible_chain(6, 600 + seed);
            SampleOptions opts;
            opts.seed = seed;
            opts.count = 500;
            for (const ConfigSample& s : sample_configs(chain, opts).samples) {
                ++checked;
                ConsistencyReport r =
                    check_consistency(chain, s.circular.beta, chain.circular_tol());
                if (!r.circular || !r.consistent()) ++inconsistent;
            }
        }
        return std::pair(inconsistent == 0,
                         std::to_string(checked) + " configurations, " +
                             std::to_string(inconsistent) + " inconsistent");
    });

    // 5. Every parameter vector from criteria 1-3 certifies the nested-root
    // system; the base identity holds on 100 further random chains.
    criterion(5, "nested-root certificates", [] {
        std::size_t checked = 0, bad = 0, identity_bad = 0;

        // The exact draws of criterion 1 (same seeds, shared streams).
        for (std::size_t n : {4, 5, 6, 10, 50}) {
            std::vector<ChainSpec> chains;
            chains.push_back(ChainSpec(std::vector<double>(n, 1.0)));
            for (std::uint64_t s = 0; s < 5; ++s)
                chains.push_back(random_feasible_chain(n, 100 * n + s));
            for (std::size_t ci = 0; ci < chains.size(); ++ci)
                for (const SemiDiagonalVector& c :
                     sample_cs(chains[ci], 7 * n + ci, 10000).values) {
                    ++checked;
                    if (!check_discriminants(c)) ++bad;
                }
        }

        // The cube points of criterion 2.
        {
            ChainSpec c5{1.0, 1.0, 1.0, 1.0, 1.0};
            substream rng(2, 0);
            for (int i = 0; i < 1000; ++i) {
                double s1 = rng.uniform_pm1();
                double s2 = rng.uniform_pm1();
                ++checked;
                if (!check_discriminants(c_from_u(cube_to_u(c5, CubePoint{s1, s2}))))
                    ++bad;
            }
        }

        // The draws of criterion 3.
        {
            ChainSpec c6{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
            for (std::uint64_t item = 0; item < 100; ++item) {
                ++checked;
                if (!check_discriminants(draw_semidiagonal(c6, 33, item).first)) ++bad;
            }
        }

        for (std::uint64_t t = 0; t < 100; ++t) {
            std::size_t n = 4 + t % 7;
            ChainSpec chain = random_feasible_chain(n, 9000 + t);
            double scale = chain.total_length() * chain.total_length();
            double identity = std::abs(2.0 * cn_constant(chain) +
                                       chain.sum_squares(n - 1) -
                                       chain.link(n) * chain.link(n));
            if (identity > 1e-12 * scale) ++identity_bad;
        }

        return std::pair(bad == 0 && identity_bad == 0,
                         std::to_string(checked) + " parameter vectors, " +
                             std::to_string(bad) + " certificate failures, " +
                             std::to_string(identity_bad) +
                             " base identity failures");
    });

    // 6. Realized configurations reproduce their parameters as cross terms.
    criterion(6, "parameter round trip", [] {
        double worst = 0.0;
        for (std::size_t n : {5, 6, 8}) {
            ChainSpec chain = random_feasible_chain(n, 41 * n);
            double scale = chain.total_length() * chain.total_length();
            SampleOptions opts;
            opts.seed = n;
            opts.count = 200;
            for (const ConfigSample& s : sample_configs(chain, opts).samples) {
                for (std::size_t j = 3; j <= n; ++j) {
                    std::vector<double> prefix(s.circular.beta.values().begin(),
                                               s.circular.beta.values().begin() +
                                                   static_cast<long>(j) - 1);
                    double x = cross_term(chain, AngleVector(prefix));
                    worst = std::max(
                        worst, std::abs(x - s.c.at_subscript(j)) / scale);
                }
            }
        }
        return std::pair(worst <= 1e-9,
                         "600 configurations, worst relative deviation " +
                             fmt("%.2e", worst));
    });

    // 7. The 5-link projection spans its interval and is cut at C_3 = +-1.
    criterion(7, "projection extent and cut", [] {
        ChainSpec c5{1.0, 1.0, 1.0, 1.0, 1.0};
        double c4_min = 1e300, c4_max = -1e300;
        double q_c3_max = -1e300, q_c3_min = 1e300;
        bool any_excluded_above = false;
        for (int i = 0; i <= 100; ++i) {
            for (int k = 0; k <= 100; ++k) {
                double s1 = -1.0 + i / 50.0;
                double s2 = -1.0 + k / 50.0;
                SemiDiagonalVector c =
                    c_from_u(cube_to_u(c5, CubePoint{s1, s2}));
                double c4 = c.at_subscript(4), c3 = c.at_subscript(3);
                c4_min = std::min(c4_min, c4);
                c4_max = std::max(c4_max, c4);
                if (in_q(c)) {
                    q_c3_max = std::max(q_c3_max, c3);
                    q_c3_min = std::min(q_c3_min, c3);
                } else if (c3 > 1.0) {
                    any_excluded_above = true;
                }
            }
        }
        bool ok = std::abs(c4_min + 1.5) <= 1e-12 &&
                  std::abs(c4_max - 0.5) <= 1e-12 &&
                  std::abs(q_c3_max - 1.0) <= 1e-9 &&
                  std::abs(q_c3_min + 1.0) <= 1e-9 && any_excluded_above;
        return std::pair(ok, "C_4 in [" + fmt("%.15g, ", c4_min) +
                                 fmt("%.15g], ", c4_max) + "admissible C_3 in [" +
                                 fmt("%.15g, ", q_c3_min) +
                                 fmt("%.15g]", q_c3_max));
    });

    // 8. The worked 4-link trace comes out angle for angle.
    criterion(8, "worked 4-link trace", [] {
        ChainSpec c4{1.0, 1.0, 1.0, 1.0};
        SemiDiagonalVector mid(c4, {0.0});
        CircularConfiguration cc =
            circular_config(mid, OrientationVector::from_string("00"));
        ClosedConfiguration closed = close_config(c4, cc);
        double pi = ckc::pi;
        double d = 0.0;
        d = std::max(d, angular_distance(cc.beta.at(1), 0.0));
        d = std::max(d, angular_distance(cc.beta.at(2), -pi / 2.0));
        d = std::max(d, angular_distance(cc.beta.at(3), -pi));
        d = std::max(d, angular_distance(closed.alpha.at(1), pi / 2.0));
        d = std::max(d, angular_distance(closed.alpha.at(2), 0.0));
        d = std::max(d, angular_distance(closed.alpha.at(3), -pi / 2.0));
        return std::pair(d <= 1e-12,
                         "worst angular deviation " + fmt("%.2e", d));
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
