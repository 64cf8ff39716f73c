#include "ckc/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ckc {

namespace {

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw io_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

std::vector<double> number_array(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array()) throw io_error(what + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw io_error(what + " must hold only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

ChainSpec load_chain(const std::string& path) {
    nlohmann::json j = load_json_file(path);
    if (!j.is_object() || !j.contains("links"))
        throw io_error(path + ": expected an object with a \"links\" array");
    return ChainSpec(number_array(j["links"], path + ": \"links\""));
}

CubePoint load_cube_point(const std::string& path) {
    nlohmann::json j = load_json_file(path);
    if (j.is_object() && j.contains("s"))
        return CubePoint(number_array(j["s"], path + ": \"s\""));
    return CubePoint(number_array(j, path));
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_angle_csv(std::ostream& out, const std::vector<AngleVector>& rows,
                     bool closed, std::size_t m) {
    const char* prefix = closed ? "alpha" : "beta";
    for (std::size_t i = 1; i <= m; ++i)
        out << prefix << '_' << i << (i < m ? "," : "\n");
    for (const AngleVector& row : rows) {
        if (row.size() != m)
            throw dimension_error("write_angle_csv: row with " +
                                  std::to_string(row.size()) + " angles, expected " +
                                  std::to_string(m));
        for (std::size_t i = 0; i < m; ++i)
            out << format_value(row[i]) << (i + 1 < m ? "," : "\n");
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

AngleCsv read_angle_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw io_error("configuration CSV is empty");
    std::vector<std::string> header = split_csv_line(line);

    AngleCsv result;
    std::size_t first = header.size();
    std::size_t m = 0;
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string h = header[i];
        while (!h.empty() && (h.back() == '\r' || h.back() == ' ')) h.pop_back();
        bool is_beta = h.rfind("beta_", 0) == 0;
        bool is_alpha = h.rfind("alpha_", 0) == 0;
        if (is_beta || is_alpha) {
            if (first == header.size()) {
                first = i;
                result.closed = is_alpha;
            }
            std::string want = (result.closed ? "alpha_" : "beta_") +
                               std::to_string(i - first + 1);
            if (h != want)
                throw io_error("configuration CSV: expected column " + want +
                               ", found " + h);
            ++m;
        } else if (first != header.size()) {
            throw io_error("configuration CSV: angle columns must be contiguous "
                           "and last");
        }
    }
    if (m == 0)
        throw io_error("configuration CSV has no beta_*/alpha_* columns");

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw io_error("configuration CSV line " + std::to_string(line_no) +
                           ": expected " + std::to_string(header.size()) +
                           " cells, found " + std::to_string(cells.size()));
        std::size_t empty = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (is_blank(cells[first + i])) ++empty;
        if (empty == m) {
            result.gap_lines.push_back(line_no);
            continue;
        }
        if (empty != 0)
            throw io_error("configuration CSV line " + std::to_string(line_no) +
                           ": partially empty angle cells");
        std::vector<double> row(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t used = 0;
            try {
                row[i] = std::stod(cells[first + i], &used);
            } catch (const std::exception&) {
                throw io_error("configuration CSV line " + std::to_string(line_no) +
                               ": cell '" + cells[first + i] + "' is not a number");
            }
            if (!is_blank(cells[first + i].substr(used)))
                throw io_error("configuration CSV line " + std::to_string(line_no) +
                               ": cell '" + cells[first + i] + "' is not a number");
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

void write_region_csv(std::ostream& out, const std::vector<RegionRow>& rows) {
    out << "C_4,C_3,in_q\n";
    for (const RegionRow& r : rows)
        out << format_value(r.c4) << ',' << format_value(r.c3) << ','
            << (r.inside_q ? 1 : 0) << '\n';
}

void write_path_csv(std::ostream& out, const std::vector<PathSample>& path,
                    std::size_t n) {
    out << "step,t,in_q";
    for (std::size_t i = 1; i <= n - 1; ++i) out << ",alpha_" << i;
    out << '\n';
    for (const PathSample& p : path) {
        out << p.index << ',' << format_value(p.t) << ',' << (p.inside_q ? 1 : 0);
        for (std::size_t i = 0; i < n - 1; ++i) {
            out << ',';
            if (p.closed) out << format_value(p.closed->alpha[i]);
        }
        out << '\n';
    }
}

}  // namespace ckc
