#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxlp/constructions.hpp"
#include "maxlp/errors.hpp"
#include "maxlp/experiments.hpp"
#include "maxlp/io.hpp"
#include "maxlp/kernels.hpp"
#include "maxlp/maximal.hpp"

namespace fs = std::filesystem;
using namespace maxlp;

namespace {

struct GridArgs {
    std::string profile = "quick";
    std::string grid; // "L,M" override; wins over profile when set
};

Profile resolve_profile(const GridArgs& ga) {
    if (!ga.grid.empty()) {
        auto comma = ga.grid.find(',');
        if (comma == std::string::npos)
            throw config_error("--grid expects 'L,M', got '" + ga.grid + "'");
        double period = 0.0;
        unsigned long long size = 0;
        try {
            std::size_t used = 0;
            period = std::stod(ga.grid.substr(0, comma), &used);
            if (used != comma) throw config_error("bad period");
            const std::string rest = ga.grid.substr(comma + 1);
            size = std::stoull(rest, &used);
            if (used != rest.size()) throw config_error("bad size");
        } catch (const config_error&) {
            throw;
        } catch (const std::exception&) {
            throw config_error("--grid expects numeric 'L,M', got '" + ga.grid + "'");
        }
        Profile p{"custom", period, static_cast<std::size_t>(size)};
        p.grid(); // validates now so errors surface as config, not mid-run
        return p;
    }
    return profile_by_name(ga.profile);
}

RadiiSet resolve_radii(const TorusGrid& g, const std::string& spec) {
    if (spec == "dyadic") return dyadic_radii(g);
    if (spec == "all") return all_radii(g);
    std::vector<std::size_t> ks;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        const std::string tok = spec.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            ks.push_back(std::stoull(tok, &used));
            if (used != tok.size()) throw config_error("bad radius");
        } catch (const std::exception&) {
            throw config_error("--radii expects dyadic, all, or k1,k2,...; got '" + spec +
                               "'");
        }
        pos = comma + 1;
    }
    return radii_from_list(g, std::move(ks));
}

Kernel resolve_kernel(const std::string& name) {
    if (name == "diamond") return diamond_kernel();
    if (name == "box") return box_kernel();
    if (name == "smooth") return smooth_test_kernel();
    throw config_error("unknown kernel '" + name + "' (expected diamond, box, smooth)");
}

std::ofstream open_out_file(const fs::path& p) {
    std::ofstream out(p);
    if (!out) throw config_error("cannot open for writing: " + p.string());
    return out;
}

int cmd_compute(const std::string& in, const std::string& op,
                const std::string& kernel_name, const std::string& radii_spec,
                const std::string& out_dir) {
    GridFunction f = read_grid_function_file(in);
    RadiiSet radii = resolve_radii(f.grid, radii_spec);
    MaximalResult res;
    if (op == "hl")
        res = hardy_littlewood(f, radii);
    else if (op == "sharp")
        res = sharp_maximal(f, radii);
    else if (op == "diamond")
        res = diamond_maximal(f, radii);
    else if (op == "tk")
        res = tk_star(f, resolve_kernel(kernel_name), radii);
    else
        throw config_error("unknown operator '" + op +
                           "' (expected hl, sharp, diamond, tk)");

    if (out_dir.empty()) {
        write_grid_function(res.values, std::cout);
        return 0;
    }
    fs::create_directories(out_dir);
    write_grid_function_file(res.values, (fs::path(out_dir) / (op + ".txt")).string());
    nlohmann::json side = nlohmann::json::parse(format_maximal_sidecar(res));
    side["config"] = {{"cmd", "compute"},
                      {"op", op},
                      {"kernel", op == "tk" ? kernel_name : ""},
                      {"radii", radii_spec},
                      {"in", in}};
    auto out = open_out_file(fs::path(out_dir) / (op + ".json"));
    out << side.dump(2) << "\n";
    return 0;
}

int cmd_bnorm(const std::string& in) {
    GridFunction f = read_grid_function_file(in);
    std::cout << format_bnorm_report(b_norm(f)) << "\n";
    return 0;
}

int cmd_scan(const std::string& name, const GridArgs& ga, int n_lo, int n_hi,
             bool n_hi_set, const std::string& kernel_name, std::uint64_t seed,
             int workers, double tol, const std::string& out_dir) {
    Profile p = resolve_profile(ga);
    ScanTable t;
    std::string args_note;
    if (name == "ratio") {
        const int cap = max_admissible_terms(p.grid());
        const int hi = n_hi_set ? n_hi : std::min(15, cap);
        if (n_hi_set && n_hi > cap)
            throw admissibility_error("requested N up to " + std::to_string(n_hi) +
                                      " does not fit grid " +
                                      std::to_string(static_cast<long long>(p.period)) + "," +
                                      std::to_string(p.size) +
                                      "; max admissible N = " + std::to_string(cap));
        t = ratio_scan(p, n_lo, hi, workers);
        args_note = "args: n_lo=" + std::to_string(n_lo) + " n_hi=" + std::to_string(hi);
    } else if (name == "kernel-decay") {
        Kernel k = resolve_kernel(kernel_name);
        if (!k.mean_zero)
            throw config_error("kernel-decay scan needs a mean-zero kernel; '" +
                               kernel_name + "' is not");
        t = kernel_decay_scan(p, k);
        args_note = "args: kernel=" + kernel_name;
    } else if (name == "lp-facts") {
        t = lp_kernel_facts(p);
    } else if (name == "glambda") {
        t = glambda_scan(p);
    } else {
        throw config_error("unknown scan '" + name +
                           "' (expected ratio, kernel-decay, lp-facts, glambda)");
    }
    t.seed = seed;
    t.tol = tol;
    if (!args_note.empty()) t.notes.insert(t.notes.begin(), args_note);
    if (out_dir.empty()) {
        write_scan_table(t, std::cout);
    } else {
        fs::create_directories(out_dir);
        write_scan_table_file(t, (fs::path(out_dir) / (name + ".csv")).string());
    }
    return 0;
}

int cmd_verify(const GridArgs& ga, std::uint64_t seed, int workers,
               const std::string& out_dir, const std::string& cal_path) {
    Profile p = resolve_profile(ga);
    Calibration cal = load_calibration(cal_path);
    SuiteResult res = run_suite(p, cal, seed, workers);

    std::size_t failed = 0;
    for (const auto& c : res.checks) {
        if (!c.pass) ++failed;
        std::printf("[%s] %-34s observed=%-14.6g bound=%-14.6g [%s]\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.observed, c.bound,
                    c.anchor.c_str());
    }
    std::printf("verify: %zu checks, %zu failed (profile %s, seed %llu, calibration v%d)\n",
                res.checks.size(), failed, p.name.c_str(),
                static_cast<unsigned long long>(seed), cal.version);

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_check_reports_file(res.checks,
                                 (fs::path(out_dir) / "checks.jsonl").string());
        for (const auto& t : res.tables)
            write_scan_table_file(t, (fs::path(out_dir) / (t.name + ".csv")).string());
    }
    return failed == 0 ? 0 : 1;
}

int cmd_describe(const GridArgs& ga) {
    Profile p = resolve_profile(ga);
    const TorusGrid g = p.grid();
    const int cap = max_admissible_terms(g);
    ScanTable t;
    t.name = "describe";
    t.grid_desc = format_double(g.period) + "," + std::to_string(g.size);
    t.radii_desc = "-";
    t.profile = p.name;
    t.columns = {"n", "m", "period", "size", "support_radius", "top_frequency"};
    for (int n = 1; n <= cap; ++n) {
        const int m = dilation_exponent(n);
        const double scale = std::exp2(m);
        t.rows.push_back({static_cast<double>(n), static_cast<double>(m),
                          g.period / scale, static_cast<double>(g.size) / scale,
                          4.0 / scale, std::exp2(n) * scale});
    }
    t.notes.push_back("max admissible N = " + std::to_string(cap));
    write_scan_table(t, std::cout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"window maximal operators, dyadic band analysis, and the verification suite"};
    app.require_subcommand(1);

    GridArgs ga;
    std::string in_path, op = "sharp", kernel_name = "diamond", radii_spec = "dyadic";
    std::string out_dir, cal_path, scan_name;
    std::uint64_t seed = 42;
    int workers = 1, n_lo = 1, n_hi = 0;
    double tol = 0.0;

    auto add_grid_flags = [&](CLI::App* sub) {
        sub->add_option("--profile", ga.profile, "grid profile: quick, reference, large")
            ->capture_default_str();
        sub->add_option("--grid", ga.grid, "explicit grid 'L,M' (overrides --profile)");
    };

    auto* compute = app.add_subcommand("compute", "apply a maximal operator to a sampled function");
    compute->add_option("--in", in_path, "input grid-function file")->required();
    compute->add_option("--op", op, "hl, sharp, diamond, or tk")->capture_default_str();
    compute->add_option("--kernel", kernel_name, "kernel for tk: diamond, box, smooth")
        ->capture_default_str();
    compute->add_option("--radii", radii_spec, "dyadic, all, or k1,k2,...")
        ->capture_default_str();
    compute->add_option("--out", out_dir, "output directory (stdout when absent)");

    auto* bnorm = app.add_subcommand("bnorm", "norm report for a sampled function");
    bnorm->add_option("--in", in_path, "input grid-function file")->required();

    auto* scan = app.add_subcommand("scan", "run a parameter scan and emit its table");
    scan->add_option("--name", scan_name, "ratio, kernel-decay, lp-facts, glambda")
        ->required();
    add_grid_flags(scan);
    auto* nhi_opt = scan->add_option("--n-hi", n_hi, "ratio scan: largest N");
    scan->add_option("--n-lo", n_lo, "ratio scan: smallest N")->capture_default_str();
    scan->add_option("--kernel", kernel_name, "kernel-decay scan kernel")
        ->capture_default_str();
    scan->add_option("--seed", seed, "recorded in the table meta")->capture_default_str();
    scan->add_option("--workers", workers, "parallel rows")->capture_default_str();
    scan->add_option("--tol", tol, "recorded in the table meta")->capture_default_str();
    scan->add_option("--out", out_dir, "output directory (stdout when absent)");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    add_grid_flags(verify);
    verify->add_option("--seed", seed, "corpus seed")->capture_default_str();
    verify->add_option("--workers", workers, "parallel rows")->capture_default_str();
    verify->add_option("--out", out_dir, "directory for checks.jsonl and tables");
    verify->add_option("--calibration", cal_path, "calibration file (default: shipped fixture)");

    auto* describe = app.add_subcommand("describe", "admissible-N table for a grid");
    add_grid_flags(describe);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed())
            return cmd_compute(in_path, op, kernel_name, radii_spec, out_dir);
        if (bnorm->parsed()) return cmd_bnorm(in_path);
        if (scan->parsed())
            return cmd_scan(scan_name, ga, n_lo, n_hi, nhi_opt->count() > 0, kernel_name,
                            seed, workers, tol, out_dir);
        if (verify->parsed()) return cmd_verify(ga, seed, workers, out_dir, cal_path);
        if (describe->parsed()) return cmd_describe(ga);
    } catch (const admissibility_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
