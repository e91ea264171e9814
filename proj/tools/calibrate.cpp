// Maintainer tool: remeasure the calibration constants on the reference
// profile and freeze them. The shipped fixture is a regression baseline, so
// overwriting requires --force.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "maxlp/errors.hpp"
#include "maxlp/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"measure calibration constants (reference profile) and write the fixture"};
    std::uint64_t seed = 42;
    int workers = 1;
    std::string out_path;
    bool force = false;
    app.add_option("--seed", seed, "corpus seed")->capture_default_str();
    app.add_option("--workers", workers, "parallel rows")->capture_default_str();
    app.add_option("--out", out_path, "output path (default: the shipped fixture path)");
    app.add_flag("--force", force, "allow overwriting an existing file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const std::string path =
            out_path.empty() ? maxlp::default_calibration_path() : out_path;
        if (std::filesystem::exists(path) && !force)
            throw maxlp::config_error("refusing to overwrite " + path +
                                      "; pass --force to replace the fixture");
        maxlp::Calibration cal = maxlp::measure_calibration(seed, workers);
        std::filesystem::create_directories(std::filesystem::path(path).parent_path());
        std::ofstream out(path);
        if (!out) throw maxlp::config_error("cannot open for writing: " + path);
        const std::string text = maxlp::format_calibration(cal);
        out << text;
        std::cout << text;
        return 0;
    } catch (const maxlp::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
