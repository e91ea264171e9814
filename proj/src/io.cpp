#include "maxlp/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "maxlp/errors.hpp"

namespace maxlp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what, std::size_t line, const std::string& msg) {
    throw config_error(what + ":" + std::to_string(line) + ": " + msg);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot open for writing: " + path);
    return out;
}

// Splits on whitespace; returns tokens.
std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(std::move(tok));
    return tokens;
}

double parse_double(const std::string& tok, const std::string& what, std::size_t line) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        fail(what, line, "expected a finite number, got '" + tok + "'");
    return v;
}

// "key=value" pairs from a meta line "# key=value key=value ...".
std::map<std::string, std::string> parse_meta(const std::string& line,
                                              const std::string& what,
                                              std::size_t lineno) {
    if (line.size() < 2 || line[0] != '#')
        fail(what, lineno, "expected a '# key=value ...' header");
    std::map<std::string, std::string> meta;
    for (const auto& tok : split_ws(line.substr(1))) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            fail(what, lineno, "malformed header token '" + tok + "'");
        meta[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return meta;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_grid_function(const GridFunction& f, std::ostream& out) {
    out << "# period=" << format_double(f.grid.period) << " size=" << f.grid.size
        << "\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
        out << format_double(f.grid.abscissa(i)) << ' '
            << format_double(f.samples[i].real());
        if (!f.is_real) out << ' ' << format_double(f.samples[i].imag());
        out << '\n';
    }
}

void write_grid_function_file(const GridFunction& f, const std::string& path) {
    auto out = open_out(path);
    write_grid_function(f, out);
}

GridFunction read_grid_function(std::istream& in, const std::string& what) {
    std::string line;
    if (!std::getline(in, line)) fail(what, 1, "empty input");
    auto meta = parse_meta(line, what, 1);
    if (!meta.count("period") || !meta.count("size"))
        fail(what, 1, "header must carry period= and size=");
    double period = parse_double(meta["period"], what, 1);
    double size_d = parse_double(meta["size"], what, 1);
    if (size_d <= 0 || size_d != std::floor(size_d))
        fail(what, 1, "size must be a positive integer");
    TorusGrid grid;
    try {
        grid = make_grid(period, static_cast<std::size_t>(size_d));
    } catch (const std::exception& e) {
        fail(what, 1, e.what());
    }

    GridFunction f = zeros(grid);
    bool any_imag = false;
    std::size_t count = 0;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() && in.peek() == EOF) break; // trailing newline
        auto tokens = split_ws(line);
        if (tokens.empty()) fail(what, lineno, "blank line inside data");
        if (count >= grid.size) fail(what, lineno, "more samples than size");
        if (tokens.size() != 2 && tokens.size() != 3)
            fail(what, lineno, "expected 'x value' or 'x re im'");
        double x = parse_double(tokens[0], what, lineno);
        double a = grid.abscissa(count);
        if (std::fabs(x - a) > 1e-9 * std::max(1.0, std::fabs(a)))
            fail(what, lineno,
                 "abscissa " + format_double(x) + " does not match grid point " +
                     format_double(a));
        double re = parse_double(tokens[1], what, lineno);
        double im = tokens.size() == 3 ? parse_double(tokens[2], what, lineno) : 0.0;
        if (im != 0.0) any_imag = true;
        f.samples[count] = cplx(re, im);
        ++count;
    }
    if (count != grid.size)
        fail(what, lineno, "expected " + std::to_string(grid.size) + " samples, got " +
                               std::to_string(count));
    f.is_real = !any_imag;
    return f;
}

GridFunction read_grid_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open: " + path);
    return read_grid_function(in, path);
}

void write_scan_table(const ScanTable& table, std::ostream& out) {
    out << "# name=" << table.name << " grid=" << table.grid_desc
        << " radii=" << table.radii_desc << " tol=" << format_double(table.tol)
        << " seed=" << table.seed << " profile=" << table.profile
        << " version=" << table.version << "\n";
    for (const auto& note : table.notes) out << "# note: " << note << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << format_double(row[c]);
        out << "\n";
    }
}

void write_scan_table_file(const ScanTable& table, const std::string& path) {
    auto out = open_out(path);
    write_scan_table(table, out);
}

void write_check_reports(const std::vector<CheckReport>& reports, std::ostream& out) {
    for (const auto& r : reports) {
        json obj = {{"name", r.name},
                    {"status", r.pass ? "pass" : "fail"},
                    {"observed", r.observed},
                    {"bound", r.bound},
                    {"anchor", r.anchor},
                    {"context", r.context},
                    {"grid", r.grid_desc},
                    {"cap", r.cap}};
        out << obj.dump() << "\n";
    }
}

void write_check_reports_file(const std::vector<CheckReport>& reports,
                              const std::string& path) {
    auto out = open_out(path);
    write_check_reports(reports, out);
}

std::string format_bnorm_report(const BNormReport& report) {
    json bands = json::array();
    for (const auto& [j, sup] : report.besov.bands)
        bands.push_back(json{{"j", j}, {"sup", sup}});
    json obj = {{"besov_part", report.besov.besov_part},
                {"l2_part", report.l2_part},
                {"total", report.total},
                {"low_band", report.besov.low_band},
                {"j_max", report.besov.j_max},
                {"per_band", bands}};
    return obj.dump(2);
}

std::string format_maximal_sidecar(const MaximalResult& result) {
    std::map<std::uint64_t, std::uint64_t> histogram;
    for (auto k : result.argmax_radius) ++histogram[k];
    json hist = json::object();
    for (const auto& [k, n] : histogram) hist[std::to_string(k)] = n;
    json radii = {{"description", result.radii.description},
                  {"count", result.radii.indices.size()},
                  {"dyadic_closed", result.radii.dyadic_closed}};
    if (result.radii.indices.size() <= 64) radii["indices"] = result.radii.indices;
    json obj = {{"radii", radii},
                {"cap_note", result.cap_note},
                {"argmax_histogram", hist}};
    return obj.dump(2);
}

} // namespace maxlp
