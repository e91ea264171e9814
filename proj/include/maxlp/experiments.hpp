#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "maxlp/constructions.hpp"
#include "maxlp/grid.hpp"
#include "maxlp/kernels.hpp"
#include "maxlp/maximal.hpp"
#include "maxlp/spectral.hpp"

namespace maxlp {

// A named grid. quick = (16, 2^14), reference = (16, 2^20), large = (16, 2^22).
struct Profile {
    std::string name;
    double period = 0.0;
    std::size_t size = 0;

    TorusGrid grid() const;
};

Profile profile_by_name(const std::string& name); // unknown name -> config_error
std::vector<std::string> profile_names();

// Measured constants with headroom, frozen to a text file: a "version <int>"
// line followed by "<key> <value>" lines. Upper-bound keys carry 1.5x slack
// over the values measured on the reference profile; lower-bound keys carry
// 1/1.5. Missing key or malformed file -> config_error.
struct Calibration {
    int version = 1;
    std::map<std::string, double> values;

    double get(const std::string& key) const;
};

std::string default_calibration_path();
Calibration parse_calibration(std::istream& in, const std::string& what);
Calibration load_calibration(const std::string& path); // "" uses the default path
std::string format_calibration(const Calibration& cal);

// One verified fact. `observed` is the measured quantity, `bound` the gate it
// was compared against; `context` states the comparison direction and the
// corpus/grid it ran on. `anchor` groups related checks under a stable slug.
struct CheckReport {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    double bound = 0.0;
    std::string anchor;
    std::string context;
    std::string grid_desc;
    std::string cap;
};

// Numeric table with enough metadata to be regenerated bit-for-bit from
// (profile, seed, version). No timestamps anywhere.
struct ScanTable {
    std::string name;
    std::string grid_desc;
    std::string radii_desc;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::string profile;
    int version = 1;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> notes; // skipped rows, internal-grid remarks

    std::size_t column_index(const std::string& col) const; // missing -> config_error
    double cell(std::size_t row, const std::string& col) const;
};

// Real trigonometric polynomial with Hermitian coefficients drawn uniformly
// from [-1,1] on frequencies |xi| <= top_frequency (mt19937_64, fixed
// mapping of draws to bins, so a seed pins the function exactly).
GridFunction random_band_limited(const TorusGrid& grid, std::uint64_t seed,
                                 double top_frequency);

// Steps, spikes, and mixtures thereof; the discontinuous corpus the window
// operators must survive without smoothness assumptions.
std::vector<GridFunction> adversarial_corpus(const TorusGrid& grid);

// --- pointwise operator facts ---------------------------------------------

// diamond <= sharp <= 2 * average on `count` seeded random band-limited
// functions plus the adversarial corpus. Slack floor -1e-12.
std::vector<CheckReport> check_domination(const Profile& profile, int count,
                                          std::uint64_t seed);

// Widened-band reproduction, telescoping sum, and the multiplier partition
// of unity, all at the profile grid.
std::vector<CheckReport> check_projection_algebra(const Profile& profile,
                                                  std::uint64_t seed);

// --- scans (tables) and their gates ----------------------------------------

// ||K_r * (widened band kernel)||_1 against min(2^j r, 1/(2^j r)) across
// log-spaced scale products s = 2^j r.
ScanTable kernel_decay_scan(const Profile& profile, const Kernel& kernel);
std::vector<CheckReport> evaluate_kernel_decay(const ScanTable& table,
                                               const Calibration* cal);

// Band kernel facts per j: L1 mass, scaled derivative mass, scaled first
// moment, mean residual; plain and widened variants.
ScanTable lp_kernel_facts(const Profile& profile);
std::vector<CheckReport> evaluate_lp_kernel_facts(const ScanTable& table);

// Band energy of the modulated bump across (lambda, j), plus the low piece.
ScanTable glambda_scan(const Profile& profile);
std::vector<CheckReport> evaluate_glambda(const ScanTable& table,
                                          const Calibration* cal);

// One row per N: lacunary L1 gauge, plateau-bump envelope norms, sharp
// maximal core minimum and norms, the two operator/input norm ratios, and
// the predicted contrast sqrt(N)/(log2 N + 1).
ScanTable ratio_scan(const Profile& profile, int n_lo, int n_hi, int workers);
std::vector<CheckReport> evaluate_ratio(const ScanTable& table,
                                        const Calibration* cal);

// --- structural checks ------------------------------------------------------

// Dilation versus the window operators: exact agreement with an independent
// strided-window evaluator, a quadrature-refinement diagnostic for the full
// window mismatch, and the norm growth bounds in both dilation directions.
std::vector<CheckReport> dilation_lemma_check(const Profile& profile,
                                              const Calibration* cal,
                                              std::uint64_t seed);

// Production paths against the brute-force evaluators on grids small enough
// to enumerate every radius.
std::vector<CheckReport> oracle_equivalence_check(std::uint64_t seed);

// Mollifier mean preservation and the two norm comparison constants.
std::vector<CheckReport> mollifier_embedding_check(const Profile& profile,
                                                   const Calibration* cal,
                                                   std::uint64_t seed);

// --- the suite ---------------------------------------------------------------

struct SuiteResult {
    std::vector<CheckReport> checks;
    std::vector<ScanTable> tables;

    bool all_pass() const;
};

// Runs every check and scan above at the given profile and gates the results
// against `cal`. Deterministic for fixed (profile, seed, version, workers=any):
// worker count only partitions row computation, never changes values.
SuiteResult run_suite(const Profile& profile, const Calibration& cal,
                      std::uint64_t seed, int workers);

// Reference-profile measurement run: recomputes every calibrated quantity
// with no gates and returns the headroomed constants.
Calibration measure_calibration(std::uint64_t seed, int workers);

} // namespace maxlp
