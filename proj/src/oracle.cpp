#include "ckc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ckc {

ConsistencyReport check_consistency(const ChainSpec& chain, const AngleVector& beta,
                             double tol) {
    std::size_t n = chain.size();
    if (beta.size() != n - 1)
        throw dimension_error("check_consistency: need exactly n-1 angles");
    if (!(tol > 0.0))
        throw invalid_parameter_error("check_consistency: tolerance must be positive");

    ConsistencyReport report;
    report.residual = circular_residual(chain, beta);
    report.circular = report.residual <= tol;

    // Parameters induced by the angles: C_j is the cross term of the first
    // j-1 of them.
    std::vector<double> c(n - 3);
    for (std::size_t j = 3; j <= n - 1; ++j) {
        AngleVector prefix(std::vector<double>(beta.values().begin(),
                                               beta.values().begin() + (j - 1)));
        c[j - 3] = cross_term(chain, prefix);
    }
    SemiDiagonalVector sd(chain, c);
    report.in_region = in_sd(sd, tol) && in_q(sd, tol);

    // Triangle system on squared diagonals. The first j-1 angles determine
    // the diagonal through C_j; the outermost diagonal is pinned to a_n,
    // which is what ties the system to the closing circle.
    std::vector<double> diag_sq(n);
    diag_sq[1] = chain.link(1) * chain.link(1);
    for (std::size_t m = 2; m <= n - 2; ++m)
        diag_sq[m] = chain.sum_squares(m) + 2.0 * c[m - 2];
    diag_sq[n - 1] = chain.link(n) * chain.link(n);

    report.diagonals_ok = true;
    for (std::size_t k = 1; k <= n - 2; ++k) {
        double a = chain.link(n - k);
        double outer = std::sqrt(std::max(0.0, diag_sq[n - k]));
        double lo = (outer - a) * (outer - a);
        double hi = (outer + a) * (outer + a);
        double inner = diag_sq[n - k - 1];
        if (inner < lo - tol || inner > hi + tol) report.diagonals_ok = false;
    }
    return report;
}

bool check_discriminants(const SemiDiagonalVector& c) {
    const ChainSpec& chain = c.chain();
    std::size_t n = chain.size();
    if (!in_sd(c))
        throw domain_error("check_discriminants: vector outside the nested-root region");
    double tol = chain.nonneg_tol();
    double an = chain.link(n);
    if (std::fabs(2.0 * c.at_subscript(n) + chain.sum_squares(n - 1) - an * an) > tol)
        return false;
    for (std::size_t k = 1; k <= n - 3; ++k) {
        double disc = 2.0 * c.at_subscript(n - k + 1) + chain.sum_squares(n - k);
        if (disc < -tol) return false;
    }
    return true;
}

double grid_tolerance(const ChainSpec& chain, std::size_t resolution) {
    double total = chain.total_length();
    return 4.0 * total * (two_pi / static_cast<double>(resolution)) * total;
}

namespace {

void check_grid_args(const ChainSpec& chain, std::size_t resolution, double tol) {
    if (chain.size() > 5)
        throw cost_guard_error("grid search over " +
                               std::to_string(chain.size() - 1) +
                               " angles refused (chains up to n = 5 only)");
    if (resolution < 8)
        throw invalid_parameter_error("grid resolution must be at least 8");
    if (!(tol > 0.0))
        throw invalid_parameter_error("grid tolerance must be positive");
}

std::vector<double> grid_values(std::size_t resolution) {
    std::vector<double> v(resolution);
    for (std::size_t i = 0; i < resolution; ++i)
        v[i] = -pi + two_pi * static_cast<double>(i + 1) /
                         static_cast<double>(resolution);
    return v;
}

struct GridTables {
    std::vector<double> values, cosines, sines;
    explicit GridTables(std::size_t resolution) {
        values = grid_values(resolution);
        cosines.resize(resolution);
        sines.resize(resolution);
        for (std::size_t i = 0; i < resolution; ++i) {
            cosines[i] = std::cos(values[i]);
            sines[i] = std::sin(values[i]);
        }
    }
};

// Enumerates dimensions `level`..d-1 with the endpoint prefix (px, py)
// already covering levels 0..level-1, appending hits in lexicographic
// order. idx carries the indices chosen so far.
void grid_scan(const ChainSpec& chain, const GridTables& g, double tol,
               std::size_t level, double px, double py, std::vector<std::size_t>& idx,
               std::vector<AngleVector>& out) {
    std::size_t d = chain.size() - 1;
    std::size_t res = g.values.size();
    double an = chain.link(chain.size());
    double an_sq = an * an;
    if (level == d - 1) {
        double a = chain.link(d);
        for (std::size_t i = 0; i < res; ++i) {
            double x = px + a * g.cosines[i];
            double y = py + a * g.sines[i];
            if (std::fabs(x * x + y * y - an_sq) <= tol) {
                idx[level] = i;
                std::vector<double> angles(d);
                for (std::size_t l = 0; l < d; ++l) angles[l] = g.values[idx[l]];
                out.emplace_back(std::move(angles));
            }
        }
        return;
    }
    double a = chain.link(level + 1);
    for (std::size_t i = 0; i < res; ++i) {
        idx[level] = i;
        grid_scan(chain, g, tol, level + 1, px + a * g.cosines[i],
                  py + a * g.sines[i], idx, out);
    }
}

}  // namespace

namespace serial {

std::vector<AngleVector> grid_circular_configs(const ChainSpec& chain,
                                               std::size_t resolution, double tol) {
    check_grid_args(chain, resolution, tol);
    GridTables g(resolution);
    std::vector<std::size_t> idx(chain.size() - 1, 0);
    std::vector<AngleVector> out;
    grid_scan(chain, g, tol, 0, 0.0, 0.0, idx, out);
    return out;
}

double min_x_grid(const ChainSpec& chain, std::size_t m, std::size_t resolution) {
    if (m < 2 || m > chain.size() - 1)
        throw dimension_error("min_x_grid: m = " + std::to_string(m) +
                              " outside [2, " + std::to_string(chain.size() - 1) + "]");
    if (m > 4)
        throw cost_guard_error("min_x_grid: exhaustive search over m > 4 refused");
    if (resolution < 8)
        throw invalid_parameter_error("grid resolution must be at least 8");

    GridTables g(resolution);
    // First angle held at the first grid value; see the header note on why
    // this is exact.
    double px = chain.link(1) * g.cosines[0];
    double py = chain.link(1) * g.sines[0];
    double best = std::numeric_limits<double>::infinity();

    // Walks levels 2..m; x accumulates the cross term incrementally:
    // adding angle theta with prefix sums (px, py) contributes
    // a * (cos(theta) px + sin(theta) py).
    auto scan = [&](auto&& self, std::size_t level, double x, double sx,
                    double sy) -> void {
        double a = chain.link(level);
        if (level == m) {
            for (std::size_t i = 0; i < resolution; ++i) {
                double v = x + a * (g.cosines[i] * sx + g.sines[i] * sy);
                if (v < best) best = v;
            }
            return;
        }
        for (std::size_t i = 0; i < resolution; ++i) {
            double v = x + a * (g.cosines[i] * sx + g.sines[i] * sy);
            self(self, level + 1, v, sx + a * g.cosines[i], sy + a * g.sines[i]);
        }
    };
    scan(scan, 2, 0.0, px, py);
    return best;
}

}  // namespace serial

std::vector<AngleVector> grid_circular_configs(const ChainSpec& chain,
                                               std::size_t resolution, double tol) {
    check_grid_args(chain, resolution, tol);
    GridTables g(resolution);
    std::vector<std::vector<AngleVector>> buckets(resolution);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i0 = 0; i0 < static_cast<std::int64_t>(resolution); ++i0) {
        std::vector<std::size_t> idx(chain.size() - 1, 0);
        idx[0] = static_cast<std::size_t>(i0);
        double a = chain.link(1);
        grid_scan(chain, g, tol, 1, a * g.cosines[i0], a * g.sines[i0], idx,
                  buckets[i0]);
    }

    std::vector<AngleVector> out;
    for (std::vector<AngleVector>& b : buckets)
        for (AngleVector& v : b) out.push_back(std::move(v));
    return out;
}

double min_x_grid(const ChainSpec& chain, std::size_t m, std::size_t resolution) {
    if (m < 2 || m > chain.size() - 1)
        throw dimension_error("min_x_grid: m = " + std::to_string(m) +
                              " outside [2, " + std::to_string(chain.size() - 1) + "]");
    if (m > 4)
        throw cost_guard_error("min_x_grid: exhaustive search over m > 4 refused");
    if (resolution < 8)
        throw invalid_parameter_error("grid resolution must be at least 8");

    GridTables g(resolution);
    double px = chain.link(1) * g.cosines[0];
    double py = chain.link(1) * g.sines[0];
    double best = std::numeric_limits<double>::infinity();

    // Same walk as the serial reference, parallel over the second angle.
    auto scan = [&](auto&& self, std::size_t level, double x, double sx, double sy,
                    double& local_best) -> void {
        double a = chain.link(level);
        if (level == m) {
            for (std::size_t i = 0; i < resolution; ++i) {
                double v = x + a * (g.cosines[i] * sx + g.sines[i] * sy);
                if (v < local_best) local_best = v;
            }
            return;
        }
        for (std::size_t i = 0; i < resolution; ++i) {
            double v = x + a * (g.cosines[i] * sx + g.sines[i] * sy);
            self(self, level + 1, v, sx + a * g.cosines[i], sy + a * g.sines[i],
                 local_best);
        }
    };

    if (m == 2) {
        // Only one free angle; the serial walk is already a single loop.
        scan(scan, 2, 0.0, px, py, best);
        return best;
    }

#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
    for (std::int64_t i1 = 0; i1 < static_cast<std::int64_t>(resolution); ++i1) {
        double a = chain.link(2);
        double x = a * (g.cosines[i1] * px + g.sines[i1] * py);
        double local = best;
        scan(scan, 3, x, px + a * g.cosines[i1], py + a * g.sines[i1], local);
        if (local < best) best = local;
    }
    return best;
}

}  // namespace ckc
