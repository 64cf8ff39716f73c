#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ckc/io.hpp"
#include "ckc/oracle.hpp"
#include "ckc/svg.hpp"

namespace {

// Exit codes: 0 success, 1 validation/consistency findings, 2 input error,
// 3 infeasible chain, 4 domain or cost guard, 5 internal failure.
constexpr int exit_ok = 0;
constexpr int exit_findings = 1;
constexpr int exit_input = 2;
constexpr int exit_infeasible = 3;
constexpr int exit_domain = 4;
constexpr int exit_internal = 5;

// Writes to the path, or to stdout when the path is empty or "-".
class OutStream {
public:
    explicit OutStream(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw ckc::io_error("cannot open " + path + " for writing");
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

struct SampleArgs {
    std::string chain_path, eps = "random", out_path, svg_path;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    double beta1 = 0.0;
    bool closed = false;
};

struct RegionArgs {
    std::string chain_path, out_path, svg_path;
    std::size_t grid = 101;
};

struct ValidateArgs {
    std::string chain_path, csv_path;
    double tol = 0.0;  // 0 means the chain default
};

struct PathArgs {
    std::string chain_path, from_path, to_path, eps, out_path, svg_path;
    std::size_t steps = 16;
    double beta1 = 0.0;
};

struct OracleArgs {
    std::string chain_path;
    std::size_t resolution = 48;
    std::uint64_t seed = 0;
    double tol = 0.0;  // 0 means the resolution-coupled default
};

ckc::EpsPolicy parse_eps(const std::string& text) {
    if (text == "random") return ckc::EpsPolicy::random();
    if (text == "all") return ckc::EpsPolicy::all();
    return ckc::EpsPolicy::fixed(ckc::OrientationVector::from_string(text));
}

int run_sample(const SampleArgs& args) {
    ckc::ChainSpec chain = ckc::load_chain(args.chain_path);
    ckc::SampleOptions options;
    options.seed = args.seed;
    options.count = args.count;
    options.eps = parse_eps(args.eps);
    options.beta1 = args.beta1;
    options.close = args.closed;

    ckc::SampleBatch batch = ckc::sample_configs(chain, options);

    std::vector<ckc::AngleVector> rows;
    rows.reserve(batch.samples.size());
    for (const ckc::ConfigSample& s : batch.samples)
        rows.push_back(args.closed ? s.closed->alpha : s.circular.beta);

    OutStream out(args.out_path);
    ckc::write_angle_csv(out.get(), rows, args.closed, chain.size() - 1);
    if (!args.svg_path.empty()) {
        std::ofstream svg(args.svg_path);
        if (!svg) throw ckc::io_error("cannot open " + args.svg_path + " for writing");
        ckc::write_config_svg(svg, chain, rows, !args.closed);
    }
    std::cerr << "sampled " << batch.samples.size() << " configurations from "
              << batch.total_draws << " draws\n";
    return exit_ok;
}

int run_region(const RegionArgs& args) {
    ckc::ChainSpec chain = ckc::load_chain(args.chain_path);
    if (chain.size() != 5)
        throw ckc::domain_error("the planar projection is defined for 5-link chains");
    if (args.grid < 1)
        throw ckc::invalid_parameter_error("grid must be at least 1");

    std::vector<double> ticks;
    if (args.grid == 1) {
        ticks.push_back(0.0);
    } else {
        ticks.reserve(args.grid);
        for (std::size_t i = 0; i < args.grid; ++i)
            ticks.push_back(-1.0 + 2.0 * static_cast<double>(i) /
                                       static_cast<double>(args.grid - 1));
    }

    std::vector<ckc::RegionRow> rows;
    rows.reserve(ticks.size() * ticks.size());
    for (double s1 : ticks) {
        for (double s2 : ticks) {
            ckc::SemiDiagonalVector c =
                ckc::c_from_u(ckc::cube_to_u(chain, ckc::CubePoint{s1, s2}));
            rows.push_back({c.at_subscript(4), c.at_subscript(3), ckc::in_q(c)});
        }
    }

    OutStream out(args.out_path);
    ckc::write_region_csv(out.get(), rows);
    if (!args.svg_path.empty()) {
        std::ofstream svg(args.svg_path);
        if (!svg) throw ckc::io_error("cannot open " + args.svg_path + " for writing");
        ckc::write_region_svg(svg, rows, chain.link(1) * chain.link(2));
    }
    return exit_ok;
}

int run_validate(const ValidateArgs& args) {
    ckc::ChainSpec chain = ckc::load_chain(args.chain_path);
    std::ifstream in(args.csv_path);
    if (!in) throw ckc::io_error("cannot open " + args.csv_path);
    ckc::AngleCsv csv = ckc::read_angle_csv(in);

    double tol = args.tol > 0.0
                     ? args.tol
                     : (csv.closed ? chain.closure_tol() : chain.circular_tol());

    std::size_t failures = 0, inconsistent = 0;
    double max_residual = 0.0;
    for (std::size_t r = 0; r < csv.rows.size(); ++r) {
        if (csv.rows[r].size() != chain.size() - 1)
            throw ckc::io_error("row " + std::to_string(r + 1) + " has " +
                                std::to_string(csv.rows[r].size()) +
                                " angles, chain needs " +
                                std::to_string(chain.size() - 1));
        ckc::AngleVector beta(csv.rows[r]);
        double residual = csv.closed ? ckc::closure_residual(chain, beta)
                                     : ckc::circular_residual(chain, beta);
        max_residual = std::max(max_residual, residual);
        bool pass = residual <= tol;
        if (!pass) {
            ++failures;
            if (failures <= 10)
                std::cout << "fail row " << (r + 1) << ": residual "
                          << ckc::format_value(residual) << " > "
                          << ckc::format_value(tol) << "\n";
        }
        if (!ckc::check_consistency(chain, beta, chain.circular_tol()).consistent())
            ++inconsistent;
    }

    std::cout << "checked " << csv.rows.size() << " configurations ("
              << (csv.closed ? "closed" : "circular") << "), " << csv.gap_lines.size()
              << " gap rows skipped\n";
    std::cout << "max residual " << ckc::format_value(max_residual) << " (tolerance "
              << ckc::format_value(tol) << ")\n";
    std::cout << failures << " residual failures, " << inconsistent
              << " inconsistent closure reports\n";
    return failures == 0 ? exit_ok : exit_findings;
}

int run_path(const PathArgs& args) {
    ckc::ChainSpec chain = ckc::load_chain(args.chain_path);
    ckc::CubePoint from = ckc::load_cube_point(args.from_path);
    ckc::CubePoint to = ckc::load_cube_point(args.to_path);
    ckc::OrientationVector eps =
        args.eps.empty() ? ckc::OrientationVector::zeros(chain.size() - 2)
                         : ckc::OrientationVector::from_string(args.eps);

    std::vector<ckc::PathSample> path =
        ckc::path_in_cube(chain, from, to, args.steps, eps, args.beta1);

    OutStream out(args.out_path);
    ckc::write_path_csv(out.get(), path, chain.size());

    std::size_t gaps = 0;
    std::vector<ckc::AngleVector> drawn;
    for (const ckc::PathSample& p : path) {
        if (p.inside_q) {
            drawn.push_back(p.closed->alpha);
        } else {
            ++gaps;
            std::cerr << "gap at step " << p.index << " (t = "
                      << ckc::format_value(p.t)
                      << "): parameters leave the reachability box\n";
        }
    }
    if (!args.svg_path.empty()) {
        std::ofstream svg(args.svg_path);
        if (!svg) throw ckc::io_error("cannot open " + args.svg_path + " for writing");
        ckc::write_config_svg(svg, chain, drawn, false);
    }
    std::cerr << "path of " << path.size() << " steps, " << gaps << " gaps\n";
    return exit_ok;
}

int run_oracle(const OracleArgs& args) {
    ckc::ChainSpec chain = ckc::load_chain(args.chain_path);
    double tol =
        args.tol > 0.0 ? args.tol : ckc::grid_tolerance(chain, args.resolution);
    bool all_ok = true;
    auto report = [&](bool ok, const std::string& line) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << line << "\n";
        all_ok = all_ok && ok;
    };

    std::vector<ckc::AngleVector> found =
        ckc::grid_circular_configs(chain, args.resolution, tol);
    std::size_t inconsistent = 0;
    for (const ckc::AngleVector& beta : found)
        if (!ckc::check_consistency(chain, beta, tol).consistent()) ++inconsistent;
    report(inconsistent == 0,
           "grid search: " + std::to_string(found.size()) + " configurations, " +
               std::to_string(inconsistent) + " inconsistent closure reports");

    if (chain.closure_feasible()) {
        ckc::SampleOptions options;
        options.seed = args.seed;
        options.count = 200;
        ckc::SampleBatch batch = ckc::sample_configs(chain, options);
        std::size_t bad_sample = 0, bad_roots = 0;
        for (const ckc::ConfigSample& s : batch.samples) {
            if (!ckc::check_consistency(chain, s.circular.beta, chain.circular_tol())
                     .consistent())
                ++bad_sample;
            if (!ckc::check_discriminants(s.c)) ++bad_roots;
        }
        report(bad_sample == 0, "sampled configurations: " +
                                    std::to_string(batch.samples.size()) +
                                    " checked, " + std::to_string(bad_sample) +
                                    " inconsistent closure reports");
        report(bad_roots == 0,
               "sampled parameters: " + std::to_string(bad_roots) +
                   " discriminant violations");
    } else {
        std::cout << "[SKIP] sampling checks: chain cannot close\n";
    }

    double step = ckc::two_pi / static_cast<double>(args.resolution);
    for (std::size_t m = 2; m + 1 <= chain.size() - 1 && m <= 4; ++m) {
        ckc::Interval q = ckc::qa_bounds(chain, m + 1);
        double grid_min = ckc::min_x_grid(chain, m, args.resolution);
        double bound = 2.0 * step * q.hi;
        bool ok = grid_min >= q.lo - chain.nonneg_tol() && grid_min <= q.lo + bound;
        report(ok, "cross-term minimum over " + std::to_string(m) +
                       " links: grid " + ckc::format_value(grid_min) +
                       " vs bound " + ckc::format_value(q.lo) + " (+" +
                       ckc::format_value(bound) + ")");
    }

    return all_ok ? exit_ok : exit_findings;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar closed-chain configurations via cube parameters"};
    app.require_subcommand(1);

    SampleArgs sample;
    CLI::App* cmd_sample =
        app.add_subcommand("sample", "draw random configurations of a chain");
    cmd_sample->add_option("--chain", sample.chain_path, "chain JSON file")
        ->required();
    cmd_sample->add_option("--count", sample.count, "number of parameter draws");
    cmd_sample->add_option("--seed", sample.seed, "random seed");
    cmd_sample->add_option("--eps", sample.eps,
                           "branch bits: 'random', 'all', or a 01-string");
    cmd_sample->add_option("--beta1", sample.beta1, "first joint angle (radians)");
    cmd_sample->add_flag("--closed", sample.closed,
                         "rotate each configuration onto the closure point");
    cmd_sample->add_option("--out", sample.out_path, "CSV output (default stdout)");
    cmd_sample->add_option("--svg", sample.svg_path, "SVG drawing of the output");

    RegionArgs region;
    CLI::App* cmd_region = app.add_subcommand(
        "region", "project the admissible parameter region of a 5-link chain");
    cmd_region->add_option("--chain", region.chain_path, "chain JSON file")
        ->required();
    cmd_region->add_option("--grid", region.grid, "grid points per cube axis");
    cmd_region->add_option("--out", region.out_path, "CSV output (default stdout)");
    cmd_region->add_option("--svg", region.svg_path, "SVG drawing of the region");

    ValidateArgs validate;
    CLI::App* cmd_validate = app.add_subcommand(
        "validate", "recheck closure residuals of configurations in a CSV");
    cmd_validate->add_option("--chain", validate.chain_path, "chain JSON file")
        ->required();
    cmd_validate->add_option("csv", validate.csv_path, "configuration CSV file")
        ->required();
    cmd_validate->add_option("--tol", validate.tol,
                             "residual tolerance (default: chain tolerance)");

    PathArgs path;
    CLI::App* cmd_path = app.add_subcommand(
        "path", "walk a segment in the parameter cube and close each sample");
    cmd_path->add_option("--chain", path.chain_path, "chain JSON file")->required();
    cmd_path->add_option("--from", path.from_path, "start cube point JSON file")
        ->required();
    cmd_path->add_option("--to", path.to_path, "end cube point JSON file")
        ->required();
    cmd_path->add_option("--steps", path.steps, "number of samples, at least 2");
    cmd_path->add_option("--eps", path.eps, "branch bits as a 01-string");
    cmd_path->add_option("--beta1", path.beta1, "first joint angle (radians)");
    cmd_path->add_option("--out", path.out_path, "CSV output (default stdout)");
    cmd_path->add_option("--svg", path.svg_path, "SVG drawing of the samples");

    OracleArgs oracle;
    CLI::App* cmd_oracle = app.add_subcommand(
        "oracle", "brute-force cross-checks on a small chain");
    cmd_oracle->add_option("--chain", oracle.chain_path, "chain JSON file")
        ->required();
    cmd_oracle->add_option("--resolution", oracle.resolution,
                           "grid points per angle");
    cmd_oracle->add_option("--seed", oracle.seed, "random seed for sampling checks");
    cmd_oracle->add_option("--tol", oracle.tol,
                           "residual tolerance (default: resolution-coupled)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (cmd_sample->parsed()) return run_sample(sample);
        if (cmd_region->parsed()) return run_region(region);
        if (cmd_validate->parsed()) return run_validate(validate);
        if (cmd_path->parsed()) return run_path(path);
        if (cmd_oracle->parsed()) return run_oracle(oracle);
        std::cerr << "no subcommand\n";
        return exit_input;
    } catch (const ckc::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const ckc::invalid_chain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const ckc::dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const ckc::invalid_parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const ckc::infeasible_chain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_infeasible;
    } catch (const ckc::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const ckc::cost_guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const ckc::sampling_exhausted_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
