#include "ckc/semidiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "ckc/rng.hpp"

namespace ckc {

double cn_constant(const ChainSpec& chain) {
    std::size_t n = chain.size();
    double an = chain.link(n);
    return (an * an - chain.sum_squares(n - 1)) / 2.0;
}

SemiDiagonalVector::SemiDiagonalVector(ChainSpec chain, std::vector<double> entries)
    : chain_(std::move(chain)), entries_(std::move(entries)) {
    if (entries_.size() != chain_.size() - 3)
        throw dimension_error("semi-diagonal vector needs n-3 = " +
                              std::to_string(chain_.size() - 3) + " entries, got " +
                              std::to_string(entries_.size()));
    cn_ = cn_constant(chain_);
}

double SemiDiagonalVector::at_subscript(std::size_t j) const {
    std::size_t n = chain_.size();
    if (j < 2 || j > n)
        throw dimension_error("semi-diagonal subscript " + std::to_string(j) +
                              " outside [2, " + std::to_string(n) + "]");
    if (j == 2) return 0.0;
    if (j == n) return cn_;
    return entries_[j - 3];
}

UVector::UVector(ChainSpec chain, std::vector<double> entries)
    : chain_(std::move(chain)), entries_(std::move(entries)) {
    if (entries_.size() != chain_.size() - 3)
        throw dimension_error("U vector needs n-3 = " +
                              std::to_string(chain_.size() - 3) + " entries, got " +
                              std::to_string(entries_.size()));
    cn_ = cn_constant(chain_);
}

double UVector::at_subscript(std::size_t j) const {
    std::size_t n = chain_.size();
    if (j < 3 || j > n)
        throw dimension_error("U subscript " + std::to_string(j) + " outside [3, " +
                              std::to_string(n) + "]");
    if (j == n) return cn_;
    return entries_[j - 3];
}

CubePoint::CubePoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty())
        throw dimension_error("cube point needs at least one coordinate");
    for (double v : coords_)
        if (!(v >= -1.0 && v <= 1.0))
            throw invalid_parameter_error("cube coordinate " + std::to_string(v) +
                                          " outside [-1, 1]");
}

Interval roots(const ChainSpec& chain, double c_upper, std::size_t k) {
    std::size_t n = chain.size();
    if (k < 1 || k > n - 3)
        throw dimension_error("roots: k = " + std::to_string(k) + " outside [1, " +
                              std::to_string(n - 3) + "]");
    double disc = 2.0 * c_upper + chain.sum_squares(n - k);
    if (disc < 0.0) {
        if (disc < -chain.nonneg_tol())
            throw invalid_parameter_error("roots: discriminant " +
                                          std::to_string(disc) + " is negative");
        disc = 0.0;
    }
    double a = chain.link(n - k);
    double mid = c_upper + a * a;
    double r = a * std::sqrt(disc);
    return {mid - r, mid + r};
}

Interval qa_bounds(const ChainSpec& chain, std::size_t subscript) {
    std::size_t n = chain.size();
    if (subscript < 3 || subscript > n - 1)
        throw dimension_error("qa_bounds: subscript " + std::to_string(subscript) +
                              " outside [3, " + std::to_string(n - 1) + "]");
    std::size_t m = subscript - 1;
    double cmax = 0.0;
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
            cmax += chain.link(i) * chain.link(j);
    double longest = 0.0, total = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
        longest = std::max(longest, chain.link(i));
        total += chain.link(i);
    }
    double d_min = std::max(0.0, 2.0 * longest - total);
    double cmin = (d_min * d_min - chain.sum_squares(m)) / 2.0;
    return {cmin, cmax};
}

UVector u_from_c(const SemiDiagonalVector& c) {
    const ChainSpec& chain = c.chain();
    std::size_t n = chain.size();
    std::vector<double> u(n - 3);
    for (std::size_t j = 3; j <= n - 1; ++j) {
        double aj = chain.link(j);
        u[j - 3] = c.at_subscript(j) - c.at_subscript(j + 1) - aj * aj;
    }
    return UVector(chain, std::move(u));
}

namespace {

// Shared low-level walks. The batch samplers run these on raw buffers so a
// rejected draw costs no allocations; the public functions wrap the same
// code so both paths produce bit-identical values.

// u_desc[k-1] = U_{n-k} for k = 1..n-3.
void raw_cube_to_u(const ChainSpec& chain, const std::vector<double>& s,
                   std::vector<double>& u_desc) {
    std::size_t n = chain.size();
    double usum = 0.0;
    for (std::size_t k = 1; k <= n - 3; ++k) {
        double t = 2.0 * usum + (chain.sum_squares(n) - chain.sum_squares(n - k));
        if (t < 0.0) t = 0.0;
        double u = s[k - 1] * chain.link(n - k) * std::sqrt(t);
        u_desc[k - 1] = u;
        usum += u;
    }
}

// c_asc[j-3] = C_j from u_desc as above.
void raw_c_from_u(const ChainSpec& chain, const std::vector<double>& u_desc,
                  std::vector<double>& c_asc) {
    std::size_t n = chain.size();
    double c_upper = cn_constant(chain);
    for (std::size_t k = 1; k <= n - 3; ++k) {
        std::size_t j = n - k;
        double aj = chain.link(j);
        double cj = u_desc[k - 1] + c_upper + aj * aj;
        c_asc[j - 3] = cj;
        c_upper = cj;
    }
}

std::vector<Interval> all_qa_bounds(const ChainSpec& chain) {
    std::vector<Interval> bounds(chain.size() - 3);
    for (std::size_t j = 3; j <= chain.size() - 1; ++j)
        bounds[j - 3] = qa_bounds(chain, j);
    return bounds;
}

bool raw_in_q(const std::vector<double>& c_asc, const std::vector<Interval>& bounds,
              double margin) {
    for (std::size_t i = 0; i < c_asc.size(); ++i)
        if (c_asc[i] < bounds[i].lo - margin || c_asc[i] > bounds[i].hi + margin)
            return false;
    return true;
}

struct DrawScratch {
    std::vector<double> s, u, c;
    explicit DrawScratch(std::size_t n) : s(n - 3), u(n - 3), c(n - 3) {}
};

// One accepted draw; leaves the accepted parameters in scratch.c and the
// stream positioned right after the accepted cube point.
std::uint64_t raw_draw(const ChainSpec& chain, const std::vector<Interval>& bounds,
                       substream& rng, DrawScratch& scratch) {
    double margin = chain.nonneg_tol();
    for (std::uint64_t draws = 1; draws <= max_draws_per_item; ++draws) {
        for (double& v : scratch.s) v = rng.uniform_pm1();
        raw_cube_to_u(chain, scratch.s, scratch.u);
        raw_c_from_u(chain, scratch.u, scratch.c);
        if (raw_in_q(scratch.c, bounds, margin)) return draws;
    }
    throw sampling_exhausted_error(
        "no accepted draw in " + std::to_string(max_draws_per_item) +
        " attempts; acceptance ratio is below 1e-6");
}

}  // namespace

SemiDiagonalVector c_from_u(const UVector& u) {
    const ChainSpec& chain = u.chain();
    std::size_t n = chain.size();
    std::vector<double> u_desc(n - 3), c_asc(n - 3);
    for (std::size_t k = 1; k <= n - 3; ++k) u_desc[k - 1] = u.at_subscript(n - k);
    raw_c_from_u(chain, u_desc, c_asc);
    return SemiDiagonalVector(chain, std::move(c_asc));
}

double t_eval(const ChainSpec& chain, const std::vector<double>& u_prefix,
              std::size_t k) {
    std::size_t n = chain.size();
    if (k < 1 || k > n - 3)
        throw dimension_error("t_eval: k = " + std::to_string(k) + " outside [1, " +
                              std::to_string(n - 3) + "]");
    if (u_prefix.size() != k - 1)
        throw dimension_error("t_eval: prefix needs k-1 = " + std::to_string(k - 1) +
                              " values, got " + std::to_string(u_prefix.size()));
    double usum = 0.0;
    for (double v : u_prefix) usum += v;
    return 2.0 * usum + (chain.sum_squares(n) - chain.sum_squares(n - k));
}

UVector cube_to_u(const ChainSpec& chain, const CubePoint& s) {
    std::size_t n = chain.size();
    if (s.size() != n - 3)
        throw dimension_error("cube_to_u: point has " + std::to_string(s.size()) +
                              " coordinates, chain needs " + std::to_string(n - 3));
    std::vector<double> u_desc(n - 3);
    raw_cube_to_u(chain, s.coords(), u_desc);
    std::vector<double> u_asc(n - 3);
    for (std::size_t k = 1; k <= n - 3; ++k) u_asc[(n - k) - 3] = u_desc[k - 1];
    return UVector(chain, std::move(u_asc));
}

CubePoint u_to_cube(const UVector& u) {
    const ChainSpec& chain = u.chain();
    std::size_t n = chain.size();
    double tol = chain.nonneg_tol();
    std::vector<double> s(n - 3);
    double usum = 0.0;
    for (std::size_t k = 1; k <= n - 3; ++k) {
        double uk = u.at_subscript(n - k);
        double t = 2.0 * usum + (chain.sum_squares(n) - chain.sum_squares(n - k));
        if (t <= tol) {
            // The admissible range for U_{n-k} has collapsed to a point.
            if (std::fabs(uk) > tol)
                throw invalid_parameter_error(
                    "u_to_cube: U_" + std::to_string(n - k) + " = " +
                    std::to_string(uk) + " outside its collapsed range");
            s[k - 1] = 0.0;
        } else {
            double half_width = chain.link(n - k) * std::sqrt(t);
            if (std::fabs(uk) > half_width + tol)
                throw invalid_parameter_error(
                    "u_to_cube: U_" + std::to_string(n - k) + " = " +
                    std::to_string(uk) + " outside half-width " +
                    std::to_string(half_width));
            s[k - 1] = std::clamp(uk / half_width, -1.0, 1.0);
        }
        usum += uk;
    }
    return CubePoint(std::move(s));
}

bool in_sd(const SemiDiagonalVector& c, double margin) {
    const ChainSpec& chain = c.chain();
    std::size_t n = chain.size();
    double disc_tol = std::max(chain.nonneg_tol(), margin);
    double c_upper = c.at_subscript(n);
    for (std::size_t k = 1; k <= n - 3; ++k) {
        double disc = 2.0 * c_upper + chain.sum_squares(n - k);
        if (disc < -disc_tol) return false;
        if (disc < 0.0) disc = 0.0;
        double a = chain.link(n - k);
        double mid = c_upper + a * a;
        double r = a * std::sqrt(disc);
        double v = c.at_subscript(n - k);
        if (v < mid - r - margin || v > mid + r + margin) return false;
        c_upper = v;
    }
    return true;
}

bool in_sd(const SemiDiagonalVector& c) { return in_sd(c, c.chain().nonneg_tol()); }

bool in_q(const SemiDiagonalVector& c, double margin) {
    const ChainSpec& chain = c.chain();
    for (std::size_t j = 3; j <= chain.size() - 1; ++j) {
        Interval b = qa_bounds(chain, j);
        double v = c.at_subscript(j);
        if (v < b.lo - margin || v > b.hi + margin) return false;
    }
    return true;
}

bool in_q(const SemiDiagonalVector& c) { return in_q(c, c.chain().nonneg_tol()); }

std::pair<SemiDiagonalVector, std::uint64_t> draw_semidiagonal(
    const ChainSpec& chain, std::uint64_t seed, std::uint64_t index) {
    substream rng(seed, index);
    return draw_semidiagonal(chain, rng);
}

std::pair<SemiDiagonalVector, std::uint64_t> draw_semidiagonal(
    const ChainSpec& chain, substream& rng) {
    if (!chain.closure_feasible())
        throw infeasible_chain_error("draw_semidiagonal: chain cannot close");
    std::vector<Interval> bounds = all_qa_bounds(chain);
    DrawScratch scratch(chain.size());
    std::uint64_t draws = raw_draw(chain, bounds, rng, scratch);
    return {SemiDiagonalVector(chain, scratch.c), draws};
}

namespace serial {

SampleCsResult sample_cs(const ChainSpec& chain, std::uint64_t seed,
                         std::size_t count) {
    if (!chain.closure_feasible())
        throw infeasible_chain_error("sample_cs: chain cannot close");
    std::vector<Interval> bounds = all_qa_bounds(chain);
    DrawScratch scratch(chain.size());
    SampleCsResult result;
    result.values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        substream rng(seed, i);
        result.total_draws += raw_draw(chain, bounds, rng, scratch);
        result.values.emplace_back(chain, scratch.c);
    }
    return result;
}

}  // namespace serial

SampleCsResult sample_cs(const ChainSpec& chain, std::uint64_t seed,
                         std::size_t count) {
    if (!chain.closure_feasible())
        throw infeasible_chain_error("sample_cs: chain cannot close");
    std::vector<Interval> bounds = all_qa_bounds(chain);
    std::vector<std::vector<double>> accepted(count);
    std::vector<std::uint64_t> draws(count, 0);
    std::vector<std::exception_ptr> errors(count);

#pragma omp parallel
    {
        DrawScratch scratch(chain.size());
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            try {
                substream rng(seed, static_cast<std::uint64_t>(i));
                draws[i] = raw_draw(chain, bounds, rng, scratch);
                accepted[i] = scratch.c;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }

    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    SampleCsResult result;
    result.values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        result.total_draws += draws[i];
        result.values.emplace_back(chain, std::move(accepted[i]));
    }
    return result;
}

}  // namespace ckc
