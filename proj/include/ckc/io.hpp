#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ckc/sampler.hpp"

namespace ckc {

/// Loads a chain from a JSON file of the form {"links": [1.0, 1.0, ...]}.
/// Unreadable or malformed files raise io_error; bad link data raises
/// invalid_chain_error.
ChainSpec load_chain(const std::string& path);

/// Loads a cube point from a JSON file holding either a plain array
/// [0.5, -1.0, ...] or {"s": [...]}.
CubePoint load_cube_point(const std::string& path);

/// One row per configuration, columns beta_1..beta_m (or alpha_1..alpha_m
/// when closed is true), 17 significant digits. m fixes the header even
/// when rows is empty.
void write_angle_csv(std::ostream& out, const std::vector<AngleVector>& rows,
                     bool closed, std::size_t m);

struct AngleCsv {
    /// True when the file held alpha_* columns.
    bool closed = false;
    std::vector<std::vector<double>> rows;
    /// 1-based line numbers of rows whose angle cells were all empty
    /// (gap markers from a path file).
    std::vector<std::size_t> gap_lines;
};

/// Reads a CSV produced by write_angle_csv or write_path_csv: locates the
/// contiguous beta_*/alpha_* column block (leading bookkeeping columns are
/// ignored) and parses every configuration row.
AngleCsv read_angle_csv(std::istream& in);

struct RegionRow {
    double c4 = 0.0;
    double c3 = 0.0;
    bool inside_q = false;
};

/// Columns C_4, C_3, in_q; 17 significant digits.
void write_region_csv(std::ostream& out, const std::vector<RegionRow>& rows);

/// Columns step, t, in_q, alpha_1..alpha_{n-1}; gap rows keep their step
/// and t but leave the angle cells empty.
void write_path_csv(std::ostream& out, const std::vector<PathSample>& path,
                    std::size_t n);

/// Formats one double with 17 significant digits (round-trip exact).
std::string format_value(double v);

}  // namespace ckc
