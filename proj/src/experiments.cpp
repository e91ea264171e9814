#include "maxlp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "maxlp/errors.hpp"

namespace maxlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string desc(const TorusGrid& g) {
    return fmt(g.period) + "," + std::to_string(g.size);
}

double ols_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& body) {
    std::size_t t = workers > 1 ? std::min<std::size_t>(workers, n) : 1;
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::mutex mtx;
    std::exception_ptr first;
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::size_t tid = 0; tid < t; ++tid) {
        pool.emplace_back([&, tid] {
            try {
                for (std::size_t i = tid; i < n; i += t) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mtx);
                if (!first) first = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first) std::rethrow_exception(first);
}

CheckReport mk(std::string name, std::string anchor, bool pass, double observed,
               double bound, std::string context, std::string grid,
               std::string cap = "") {
    CheckReport r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.pass = pass;
    r.observed = observed;
    r.bound = bound;
    r.context = std::move(context);
    r.grid_desc = std::move(grid);
    r.cap = std::move(cap);
    return r;
}

double sup_abs(const GridFunction& f) {
    double m = 0.0;
    for (const auto& v : f.samples) m = std::max(m, std::abs(v));
    return m;
}

// max_i |a_i - b_i| over equal-size sample vectors
double sup_diff(const GridFunction& a, const GridFunction& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.samples[i] - b.samples[i]));
    return m;
}

const CheckReport& find_report(const std::vector<CheckReport>& reports,
                               const std::string& name) {
    for (const auto& r : reports)
        if (r.name == name) return r;
    throw config_error("internal: missing report " + name);
}

} // namespace

// --- profiles ---------------------------------------------------------------

TorusGrid Profile::grid() const { return make_grid(period, size); }

Profile profile_by_name(const std::string& name) {
    if (name == "quick") return Profile{"quick", 16.0, std::size_t{1} << 14};
    if (name == "reference") return Profile{"reference", 16.0, std::size_t{1} << 20};
    if (name == "large") return Profile{"large", 16.0, std::size_t{1} << 22};
    throw config_error("unknown profile '" + name + "' (expected quick, reference, or large)");
}

std::vector<std::string> profile_names() { return {"quick", "reference", "large"}; }

// --- calibration --------------------------------------------------------------

double Calibration::get(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end())
        throw config_error("calibration is missing key '" + key +
                           "'; restore the shipped file or re-run calibrate");
    return it->second;
}

std::string default_calibration_path() {
#ifdef MAXLP_CALIBRATION_FILE
    return MAXLP_CALIBRATION_FILE;
#else
    return "data/calibration.txt";
#endif
}

Calibration parse_calibration(std::istream& in, const std::string& what) {
    Calibration cal;
    cal.values.clear();
    std::string line;
    std::size_t lineno = 0;
    bool have_version = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key) || key[0] == '#') continue;
        if (!have_version) {
            long long v = 0;
            if (key != "version" || !(ss >> v) || v <= 0)
                throw config_error(what + ":" + std::to_string(lineno) +
                                   ": expected 'version <positive int>' first");
            std::string rest;
            if (ss >> rest)
                throw config_error(what + ":" + std::to_string(lineno) +
                                   ": trailing token '" + rest + "'");
            cal.version = static_cast<int>(v);
            have_version = true;
            continue;
        }
        double value = 0.0;
        std::string rest;
        if (!(ss >> value) || !std::isfinite(value) || (ss >> rest))
            throw config_error(what + ":" + std::to_string(lineno) +
                               ": expected '<key> <finite value>'");
        if (cal.values.count(key))
            throw config_error(what + ":" + std::to_string(lineno) +
                               ": duplicate key '" + key + "'");
        cal.values[key] = value;
    }
    if (!have_version)
        throw config_error(what + ": no 'version' line; file is empty or corrupted");
    return cal;
}

Calibration load_calibration(const std::string& path) {
    std::string p = path.empty() ? default_calibration_path() : path;
    std::ifstream in(p);
    if (!in) throw config_error("cannot open calibration file: " + p);
    return parse_calibration(in, p);
}

std::string format_calibration(const Calibration& cal) {
    std::ostringstream out;
    out << "version " << cal.version << "\n";
    for (const auto& [k, v] : cal.values) out << k << " " << fmt(v) << "\n";
    return out.str();
}

// --- tables -------------------------------------------------------------------

std::size_t ScanTable::column_index(const std::string& col) const {
    for (std::size_t c = 0; c < columns.size(); ++c)
        if (columns[c] == col) return c;
    throw config_error("table " + name + " has no column '" + col + "'");
}

double ScanTable::cell(std::size_t row, const std::string& col) const {
    return rows.at(row).at(column_index(col));
}

// --- corpus -------------------------------------------------------------------

GridFunction random_band_limited(const TorusGrid& grid, std::uint64_t seed,
                                 double top_frequency) {
    const std::size_t M = grid.size;
    auto top_bin = static_cast<std::size_t>(std::floor(top_frequency * grid.period));
    if (top_bin < 1 || top_bin >= M / 2)
        throw admissibility_error("random corpus frequency cap must land in [1/period, nyquist)");
    std::mt19937_64 rng(seed);
    auto draw = [&rng] {
        // top 53 bits -> [0,1), then affine to [-1,1]
        double u = static_cast<double>(rng() >> 11) * 0x1p-53;
        return 2.0 * u - 1.0;
    };
    std::vector<cplx> spec(M, cplx(0.0, 0.0));
    const double scale =
        static_cast<double>(M) / std::sqrt(2.0 * static_cast<double>(top_bin) + 1.0);
    spec[0] = cplx(draw() * scale, 0.0);
    for (std::size_t q = 1; q <= top_bin; ++q) {
        double re = draw(), im = draw();
        spec[q] = cplx(re, im) * scale;
        spec[M - q] = std::conj(spec[q]);
    }
    fft_inverse(spec);
    GridFunction f = zeros(grid);
    for (std::size_t i = 0; i < M; ++i) f.samples[i] = cplx(spec[i].real(), 0.0);
    f.is_real = true;
    return f;
}

std::vector<GridFunction> adversarial_corpus(const TorusGrid& grid) {
    const std::size_t M = grid.size;
    std::vector<GridFunction> out;

    GridFunction step = zeros(grid);
    for (std::size_t i = 0; i < M / 2; ++i) step.samples[i] = 1.0;
    out.push_back(step);

    GridFunction spike = zeros(grid);
    spike.samples[M / 2] = 1.0;
    out.push_back(spike);

    GridFunction spikes = zeros(grid);
    spikes.samples[M / 8] = 1.0;
    spikes.samples[M / 2] = -2.0;
    spikes.samples[(7 * M) / 8] = 0.5;
    out.push_back(spikes);

    GridFunction saw = zeros(grid);
    for (std::size_t i = 0; i < M; ++i)
        saw.samples[i] = static_cast<double>(i % 8) / 8.0 - 0.5;
    out.push_back(saw);

    GridFunction mixed = step;
    mixed.samples[(3 * M) / 4] += 3.0;
    out.push_back(mixed);

    GridFunction nested = zeros(grid);
    for (std::size_t i = 0; i < M / 4; ++i) nested.samples[i] = 1.0;
    for (std::size_t i = M / 4; i < M / 2; ++i) nested.samples[i] = -1.0;
    out.push_back(nested);

    return out;
}

// --- domination ----------------------------------------------------------------

std::vector<CheckReport> check_domination(const Profile& profile, int count,
                                          std::uint64_t seed) {
    (void)profile; // the chain is pointwise and scale-free; fixed small grids below
    const TorusGrid g_rand = make_grid(16.0, 1024);
    const TorusGrid g_adv = make_grid(16.0, 64);

    double slack_ds = kInf; // min of sharp - diamond
    double slack_sa = kInf; // min of 2*average - sharp

    auto feed = [&](const GridFunction& f, const RadiiSet& radii) {
        auto avg = hardy_littlewood(f, radii);
        auto sharp = sharp_maximal(f, radii);
        auto diamond = diamond_maximal(f, radii);
        for (std::size_t i = 0; i < f.size(); ++i) {
            double s = sharp.values.samples[i].real();
            slack_ds = std::min(slack_ds, s - diamond.values.samples[i].real());
            slack_sa = std::min(slack_sa, 2.0 * avg.values.samples[i].real() - s);
        }
    };

    const auto radii_rand = dyadic_radii(g_rand);
    const double top = std::exp2(g_rand.band_limit_index() - 2);
    for (int i = 0; i < count; ++i)
        feed(random_band_limited(g_rand, seed + static_cast<std::uint64_t>(i), top), radii_rand);

    // complex inputs exercise the slow paths of every operator
    for (int i = 0; i < 3; ++i) {
        GridFunction re = random_band_limited(g_rand, seed + 1000 + i, top);
        GridFunction im = random_band_limited(g_rand, seed + 2000 + i, top);
        GridFunction f = re;
        for (std::size_t p = 0; p < f.size(); ++p)
            f.samples[p] = cplx(re.samples[p].real(), im.samples[p].real());
        f.is_real = false;
        feed(f, radii_rand);
    }

    const auto radii_adv = all_radii(g_adv);
    for (const auto& f : adversarial_corpus(g_adv)) feed(f, radii_adv);
    for (const auto& f : adversarial_corpus(g_rand)) feed(f, radii_rand);

    const double floor = -1e-12;
    std::string ctx = std::to_string(count) +
                      " seeded random band-limited + 3 complex on (16,1024), "
                      "step/spike corpus on (16,64) and (16,1024); pass if min slack >= -1e-12";
    std::vector<CheckReport> out;
    out.push_back(mk("domination-diamond-vs-sharp", "domination-chain",
                     slack_ds >= floor, slack_ds, floor,
                     "min over corpus of (sharp - diamond); " + ctx,
                     desc(g_rand), radius_cap_note(g_rand)));
    out.push_back(mk("domination-sharp-vs-average", "domination-chain",
                     slack_sa >= floor, slack_sa, floor,
                     "min over corpus of (2*average - sharp); " + ctx,
                     desc(g_rand), radius_cap_note(g_rand)));
    return out;
}

// --- projection algebra ----------------------------------------------------------

std::vector<CheckReport> check_projection_algebra(const Profile& profile,
                                                  std::uint64_t seed) {
    const TorusGrid g = profile.grid();
    const int jmax = g.band_limit_index();

    // full-spectrum input: every band holds coefficient mass, so the relative
    // reproduction error is meaningful for all j
    GridFunction f = random_band_limited(g, seed, g.nyquist() / 2.0);

    double worst_rel = 0.0;
    for (int j = 1; j <= jmax; ++j) {
        GridFunction u = project(f, MultKind::band, j);
        GridFunction v = project(u, MultKind::widened, j);
        double denom = std::max(sup_abs(u), 1e-300);
        worst_rel = std::max(worst_rel, sup_diff(u, v) / denom);
    }

    GridFunction f2 = make_FN(g, std::min(4, max_admissible_terms(g)));
    double tele = std::max(telescope_residual(f, jmax) / std::max(sup_abs(f), 1e-300),
                           telescope_residual(f2, jmax) / std::max(sup_abs(f2), 1e-300));

    // multiplier partition: low_0 + sum of bands telescopes back to low_jmax
    double part = 0.0;
    {
        auto acc = *multiplier_values(g, MultKind::low, 0);
        for (int j = 1; j <= jmax; ++j) {
            const auto& b = *multiplier_values(g, MultKind::band, j);
            for (std::size_t q = 0; q < acc.size(); ++q) acc[q] += b[q];
        }
        const auto& lowJ = *multiplier_values(g, MultKind::low, jmax);
        for (std::size_t q = 0; q < acc.size(); ++q)
            part = std::max(part, std::fabs(acc[q] - lowJ[q]));
    }

    std::vector<CheckReport> out;
    out.push_back(mk("projection-idempotent", "projection-algebra", worst_rel <= 1e-12,
                     worst_rel, 1e-12,
                     "max over j<=jmax of ||widened(band f) - band f||_inf / ||band f||_inf, "
                     "full-spectrum random input",
                     desc(g)));
    out.push_back(mk("telescope-identity", "projection-algebra", tele <= 1e-10, tele,
                     1e-10,
                     "||f - (low + sum of bands)||_inf / ||f||_inf on random and "
                     "lacunary-envelope inputs",
                     desc(g)));
    out.push_back(mk("multiplier-partition", "projection-algebra", part <= 1e-13, part,
                     1e-13,
                     "max over bins of |low_0 + sum bands - low_jmax|", desc(g)));
    return out;
}

// --- kernel decay -----------------------------------------------------------------

namespace {

// Least-squares log-log slopes over the two pinned fit windows.
void decay_slope_fits(const ScanTable& table, double& slope_small, double& slope_large) {
    std::vector<double> ls_small, ll_small, ls_large, ll_large;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const double s = table.cell(i, "s");
        const double lhs = table.cell(i, "lhs");
        const double sig = std::log2(s);
        if (sig >= -6.0 - 1e-9 && sig <= -2.0 + 1e-9) {
            ls_small.push_back(std::log(s));
            ll_small.push_back(std::log(lhs));
        }
        if (sig >= 2.0 - 1e-9 && sig <= 6.0 + 1e-9) {
            ls_large.push_back(std::log(s));
            ll_large.push_back(std::log(lhs));
        }
    }
    slope_small = ols_slope(ls_small, ll_small);
    slope_large = ols_slope(ls_large, ll_large);
}

} // namespace

ScanTable kernel_decay_scan(const Profile& profile, const Kernel& kernel) {
    const TorusGrid g = profile.grid();
    const int jmax = g.band_limit_index();
    const double dx = g.spacing();

    ScanTable t;
    t.name = "kernel-decay";
    t.grid_desc = desc(g);
    t.radii_desc = "r=2^(sigma-j), sigma in [-7.5,7.5] step 0.5";
    t.profile = profile.name;
    t.columns = {"j", "r", "s", "lhs", "envelope", "ratio"};

    std::map<int, std::vector<cplx>> wide_fft; // FFT of the widened band kernel

    for (int half = -15; half <= 15; ++half) {
        const double sigma = 0.5 * half;
        int j = static_cast<int>(std::ceil(sigma)) + 2;
        j = std::max(1, std::min(jmax, j));
        const double r = std::exp2(sigma - j);
        if (r < 8.0 * dx || r > g.period / 4.0) {
            t.notes.push_back("skipped s=2^" + fmt(sigma) +
                              ": no band index puts r in [8*spacing, period/4]");
            continue;
        }
        auto it = wide_fft.find(j);
        if (it == wide_fft.end()) {
            GridFunction h = kernel_from_multiplier(g, *multiplier_values(g, MultKind::widened, j));
            fft_forward(h.samples);
            it = wide_fft.emplace(j, std::move(h.samples)).first;
        }
        GridFunction kr = sample_scaled(g, kernel, r);
        fft_forward(kr.samples);
        for (std::size_t q = 0; q < kr.samples.size(); ++q)
            kr.samples[q] *= it->second[q] * dx;
        fft_inverse(kr.samples);
        long double acc = 0.0L;
        for (const auto& v : kr.samples) acc += std::abs(v);
        const double lhs = static_cast<double>(acc * dx);
        const double s = std::exp2(sigma);
        const double envelope = std::min(s, 1.0 / s);
        t.rows.push_back({static_cast<double>(j), r, s, lhs, envelope, lhs / envelope});
    }
    double slope_small = 0.0, slope_large = 0.0;
    decay_slope_fits(t, slope_small, slope_large);
    t.notes.push_back("slope fit on s in [2^-6,2^-2]: " + fmt(slope_small));
    t.notes.push_back("slope fit on s in [2^2,2^6]: " + fmt(slope_large));
    return t;
}

std::vector<CheckReport> evaluate_kernel_decay(const ScanTable& table,
                                               const Calibration* cal) {
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        worst_ratio = std::max(worst_ratio, table.cell(i, "ratio"));
    double slope_small = 0.0, slope_large = 0.0;
    decay_slope_fits(table, slope_small, slope_large);

    std::vector<CheckReport> out;
    out.push_back(mk("kernel-decay-slope-small", "kernel-decay",
                     slope_small >= 0.8 && slope_small <= 1.2, slope_small, 1.2,
                     "log-log slope of L1 mass vs s on s in [2^-6, 2^-2]; band [0.8, 1.2]",
                     table.grid_desc));
    out.push_back(mk("kernel-decay-slope-large", "kernel-decay",
                     slope_large >= -1.2 && slope_large <= -0.8, slope_large, -1.2,
                     "log-log slope of L1 mass vs s on s in [2^2, 2^6]; band [-1.2, -0.8]",
                     table.grid_desc));
    if (cal) {
        const double bound = cal->get("kernel_decay_ratio");
        out.push_back(mk("kernel-decay-envelope", "kernel-decay", worst_ratio <= bound,
                         worst_ratio, bound,
                         "max over rows of L1 mass / min(s, 1/s); pass if <= stored bound",
                         table.grid_desc));
    }
    return out;
}

// --- band kernel facts ----------------------------------------------------------

namespace {

struct KernelFacts {
    double l1, deriv_l1, moment, mean_res;
};

KernelFacts band_kernel_facts(const TorusGrid& g, MultKind kind, int j) {
    const std::size_t M = g.size;
    const double dx = g.spacing();
    const auto mult = multiplier_values(g, kind, j);

    GridFunction h = kernel_from_multiplier(g, *mult);

    // derivative straight from the multiplier: one inverse transform
    std::vector<cplx> spec(M);
    for (std::size_t q = 0; q < M; ++q) {
        const double parity = (q & 1) ? -1.0 : 1.0;
        const double xi = static_cast<double>(signed_bin(q, M)) / g.period;
        spec[q] = cplx(0.0, 2.0 * 3.14159265358979323846 * xi) * ((*mult)[q] * parity);
    }
    spec[M / 2] = 0.0; // unpaired bin carries no symmetric derivative
    fft_inverse(spec);

    long double l1 = 0.0L, d1 = 0.0L, mom = 0.0L, mean = 0.0L;
    for (std::size_t i = 0; i < M; ++i) {
        const double hv = h.samples[i].real();
        l1 += std::fabs(hv);
        d1 += std::abs(spec[i]) / dx;
        mom += std::fabs(g.abscissa(i)) * std::fabs(hv);
        mean += hv;
    }
    return {static_cast<double>(l1 * dx), static_cast<double>(d1 * dx),
            static_cast<double>(mom * dx), std::fabs(static_cast<double>(mean * dx))};
}

} // namespace

ScanTable lp_kernel_facts(const Profile& profile) {
    const TorusGrid g = profile.grid();
    const int jmax = g.band_limit_index();

    ScanTable t;
    t.name = "lp-facts";
    t.grid_desc = desc(g);
    t.radii_desc = "bands j=1.." + std::to_string(jmax - 1);
    t.profile = profile.name;
    t.columns = {"j",         "h_l1",     "h_d1_scaled", "h_moment_scaled", "h_mean",
                 "ht_l1",     "ht_d1_scaled", "ht_moment_scaled", "ht_mean"};
    for (int j = 1; j <= jmax - 1; ++j) {
        const double twoj = std::exp2(j);
        auto b = band_kernel_facts(g, MultKind::band, j);
        auto w = band_kernel_facts(g, MultKind::widened, j);
        t.rows.push_back({static_cast<double>(j), b.l1, b.deriv_l1 / twoj,
                          b.moment * twoj, b.mean_res, w.l1, w.deriv_l1 / twoj,
                          w.moment * twoj, w.mean_res});
    }
    return t;
}

std::vector<CheckReport> evaluate_lp_kernel_facts(const ScanTable& table) {
    auto spread = [&](const std::string& col) {
        double lo = kInf, hi = 0.0;
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const double v = table.cell(i, col);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return std::pair<double, double>(lo, hi);
    };

    double mean_res = 0.0, min_l1 = kInf;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        mean_res = std::max({mean_res, table.cell(i, "h_mean"), table.cell(i, "ht_mean")});
        min_l1 = std::min(min_l1, table.cell(i, "h_l1"));
    }

    std::vector<CheckReport> out;
    out.push_back(mk("band-kernel-mean-zero", "band-kernel-facts", mean_res <= 1e-12,
                     mean_res, 1e-12, "max |quadrature mean| over plain and widened kernels",
                     table.grid_desc));
    out.push_back(mk("band-kernel-l1-lower", "band-kernel-facts", min_l1 >= 1.0 - 1e-10,
                     min_l1, 1.0 - 1e-10,
                     "min L1 mass; at least the multiplier sup by duality",
                     table.grid_desc));
    const struct {
        const char* col;
        const char* name;
    } fams[] = {{"h_l1", "band-kernel-l1-uniform"},
                {"h_d1_scaled", "band-kernel-derivative-uniform"},
                {"h_moment_scaled", "band-kernel-moment-uniform"},
                {"ht_l1", "wide-kernel-l1-uniform"},
                {"ht_d1_scaled", "wide-kernel-derivative-uniform"},
                {"ht_moment_scaled", "wide-kernel-moment-uniform"}};
    for (const auto& fam : fams) {
        auto [lo, hi] = spread(fam.col);
        const double r = hi / lo;
        out.push_back(mk(fam.name, "band-kernel-facts", r <= 2.0, r, 2.0,
                         std::string("max/min of ") + fam.col +
                             " across bands; scale invariance caps the spread at 2",
                         table.grid_desc));
    }
    return out;
}

// --- modulated bump bands ---------------------------------------------------------

ScanTable glambda_scan(const Profile& profile) {
    const TorusGrid g = make_grid(16.0, std::min<std::size_t>(profile.size, std::size_t{1} << 18));
    const int jmax = g.band_limit_index();
    const int jtop = std::min(11, jmax);
    const int etop2 = std::min(22, 2 * (jmax - 1)); // lambda = 2^(e/2), e/2 <= jmax-1

    ScanTable t;
    t.name = "glambda";
    t.grid_desc = desc(g);
    t.radii_desc = "lambda=2^(e/2), e=2.." + std::to_string(etop2) +
                   "; j=0 row is the low piece";
    t.profile = profile.name;
    t.columns = {"lambda", "j", "sup", "envelope", "ratio"};
    if (g.size < profile.size)
        t.notes.push_back("band sups are scale-free; computed on an internal grid");

    for (int e2 = 2; e2 <= etop2; ++e2) {
        const double lambda = std::exp2(0.5 * e2);
        GridFunction f = modulated_bump(g, lambda);
        std::vector<cplx> F = f.samples;
        fft_forward(F);
        auto band_sup = [&](MultKind kind, int j) {
            const auto mult = multiplier_values(g, kind, j);
            std::vector<cplx> spec(F.size());
            for (std::size_t q = 0; q < F.size(); ++q) spec[q] = F[q] * (*mult)[q];
            fft_inverse(spec);
            double m = 0.0;
            for (const auto& v : spec) m = std::max(m, std::abs(v));
            return m;
        };
        const double low = band_sup(MultKind::low, 0);
        t.rows.push_back({lambda, 0.0, low, 1.0 / lambda, lambda * low});
        for (int j = 1; j <= jtop; ++j) {
            const double sup = band_sup(MultKind::band, j);
            const double envelope = std::min(lambda / std::exp2(j), std::exp2(j) / lambda);
            t.rows.push_back({lambda, static_cast<double>(j), sup, envelope,
                              sup / envelope});
        }
    }
    return t;
}

std::vector<CheckReport> evaluate_glambda(const ScanTable& table, const Calibration* cal) {
    std::vector<CheckReport> out;
    if (!cal) return out;
    double band_ratio = 0.0, low_ratio = 0.0;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const double j = table.cell(i, "j");
        const double lambda = table.cell(i, "lambda");
        if (j >= 1.0)
            band_ratio = std::max(band_ratio, table.cell(i, "ratio"));
        else if (lambda >= 4.0)
            low_ratio = std::max(low_ratio, table.cell(i, "ratio"));
    }
    const double b1 = cal->get("glambda_band_ratio");
    out.push_back(mk("glambda-band-envelope", "modulated-bump-bands", band_ratio <= b1,
                     band_ratio, b1,
                     "max band sup / min(lambda/2^j, 2^j/lambda) over the scan",
                     table.grid_desc));
    const double b2 = cal->get("glambda_low_ratio");
    out.push_back(mk("glambda-low-decay", "modulated-bump-bands", low_ratio <= b2,
                     low_ratio, b2,
                     "max lambda * (low-piece sup) over lambda >= 4", table.grid_desc));
    return out;
}

// --- lacunary ratio scan ------------------------------------------------------------

ScanTable ratio_scan(const Profile& profile, int n_lo, int n_hi, int workers) {
    const TorusGrid g = profile.grid();
    const int cap = max_admissible_terms(g);
    if (n_lo < 1 || n_hi < n_lo)
        throw config_error("ratio scan needs 1 <= n_lo <= n_hi");

    ScanTable t;
    t.name = "ratio";
    t.grid_desc = desc(g);
    t.radii_desc = "dyadic";
    t.profile = profile.name;
    t.columns = {"n",
                 "lac_l1",
                 "lac_l1_over_sqrt",
                 "env_besov",
                 "env_l2",
                 "core_min",
                 "core_min_over_sqrt",
                 "sharp_env_besov",
                 "test_bnorm",
                 "sharp_test_bnorm",
                 "diamond_test_bnorm",
                 "contrast_sharp",
                 "contrast_diamond",
                 "contrast_predicted"};

    const int n_top = std::min(n_hi, cap);
    for (int n = n_top + 1; n <= n_hi; ++n)
        t.notes.push_back("skipped N=" + std::to_string(n) +
                          ": max admissible N = " + std::to_string(cap));
    if (n_lo > n_top)
        throw admissibility_error("no admissible N in [" + std::to_string(n_lo) + "," +
                                  std::to_string(n_hi) +
                                  "] on this grid; max admissible N = " +
                                  std::to_string(cap));
    const std::size_t n_rows = static_cast<std::size_t>(n_top - n_lo + 1);
    t.rows.assign(n_rows, {});

    const auto radii = dyadic_radii(g);
    const std::size_t core_half = g.size / static_cast<std::size_t>(g.period); // 1/spacing
    parallel_for(n_rows, workers, [&](std::size_t row) {
        const int n = n_lo + static_cast<int>(row);
        const double sq = std::sqrt(static_cast<double>(n));

        const double l1 = lacunary_l1_unit_interval(n);

        GridFunction fn_env = make_FN(g, n);
        const double env_besov = besov_norm(fn_env).besov_part;
        const double env_l2 = norm(fn_env, Norm::l2);

        auto sharp_env = sharp_maximal(fn_env, radii);
        const std::size_t c = g.center();
        double core_min = kInf;
        for (std::size_t i = c - core_half; i <= c + core_half; ++i)
            core_min = std::min(core_min, sharp_env.values.samples[i].real());
        const double sharp_env_besov = besov_norm(sharp_env.values).besov_part;

        GridFunction fn_test = make_fN(g, n);
        const auto radii_test = dyadic_radii(fn_test.grid);
        const double test_bnorm = b_norm(fn_test).total;
        auto sharp_test = sharp_maximal(fn_test, radii_test);
        auto diamond_test = diamond_maximal(fn_test, radii_test);
        const double sharp_test_bnorm = b_norm(sharp_test.values).total;
        const double diamond_test_bnorm = b_norm(diamond_test.values).total;

        t.rows[row] = {static_cast<double>(n),
                       l1,
                       l1 / sq,
                       env_besov,
                       env_l2,
                       core_min,
                       core_min / sq,
                       sharp_env_besov,
                       test_bnorm,
                       sharp_test_bnorm,
                       diamond_test_bnorm,
                       sharp_test_bnorm / test_bnorm,
                       diamond_test_bnorm / test_bnorm,
                       sq / (std::log2(static_cast<double>(n)) + 1.0)};
    });
    return t;
}

std::vector<CheckReport> evaluate_ratio(const ScanTable& table, const Calibration* cal) {
    std::vector<CheckReport> out;
    const std::string& gd = table.grid_desc;

    std::map<int, std::size_t> row_of;
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        row_of[static_cast<int>(table.cell(i, "n"))] = i;

    if (row_of.count(1)) {
        const double v = table.cell(row_of[1], "lac_l1");
        const double err = std::fabs(v - 2.0 / 3.14159265358979323846);
        out.push_back(mk("lacunary-l1-closed-form", "lacunary-l1-growth", err <= 1e-6,
                         err, 1e-6, "|L1 of the one-term sum - 2/pi|", gd));
    }

    double band_lo = kInf, band_hi = 0.0;
    bool any_band = false;
    for (const auto& [n, i] : row_of) {
        if (n < 2) continue;
        any_band = true;
        const double r = table.cell(i, "lac_l1_over_sqrt");
        band_lo = std::min(band_lo, r);
        band_hi = std::max(band_hi, r);
    }
    if (any_band) {
        out.push_back(mk("lacunary-l1-band-low", "lacunary-l1-growth", band_lo >= 0.45,
                         band_lo, 0.45, "min over N>=2 of L1/sqrt(N); pass if >= 0.45", gd));
        out.push_back(mk("lacunary-l1-band-high", "lacunary-l1-growth", band_hi <= 0.80,
                         band_hi, 0.80, "max over N>=2 of L1/sqrt(N); pass if <= 0.80", gd));
    }

    {
        double lo = kInf, hi = 0.0;
        for (const auto& [n, i] : row_of) {
            if (n > 13) continue;
            const double v = table.cell(i, "env_besov");
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const double r = hi / lo;
        out.push_back(mk("fn-envelope-besov-uniform", "fn-besov-uniform", r <= 3.0, r,
                         3.0, "max/min of the envelope-sum dyadic-sup norm over N<=13",
                         gd));
    }

    bool window = true;
    for (int n = 4; n <= 13; ++n) window = window && row_of.count(n);
    if (window) {
        double core_lo = kInf, core_hi = 0.0;
        std::vector<double> log_n, log_sharp_besov, r_sharp, pred, r_diamond;
        for (int n = 4; n <= 13; ++n) {
            const std::size_t i = row_of[n];
            const double cr = table.cell(i, "core_min_over_sqrt");
            core_lo = std::min(core_lo, cr);
            core_hi = std::max(core_hi, cr);
            log_n.push_back(std::log(static_cast<double>(n)));
            log_sharp_besov.push_back(std::log(table.cell(i, "sharp_env_besov")));
            r_sharp.push_back(table.cell(i, "contrast_sharp"));
            r_diamond.push_back(table.cell(i, "contrast_diamond"));
            pred.push_back(table.cell(i, "contrast_predicted"));
        }
        out.push_back(mk("sharp-core-stability", "sharp-growth", core_hi / core_lo <= 2.0,
                         core_hi / core_lo, 2.0,
                         "spread of (core min of the sharp function)/sqrt(N), N=4..13", gd));
        if (cal) {
            const double lb = cal->get("msharp_core_lb");
            out.push_back(mk("sharp-core-lower", "sharp-growth", core_lo >= lb, core_lo,
                             lb, "min over N=4..13 of core_min/sqrt(N); pass if >= stored",
                             gd));
        }
        const double slope = ols_slope(log_n, log_sharp_besov);
        out.push_back(mk("sharp-besov-slope", "sharp-growth",
                         slope >= 0.35 && slope <= 0.65, slope, 0.65,
                         "log-log slope of the sharp-function norm vs N; band [0.35, 0.65]",
                         gd));

        double dmin = kInf, dmax = 0.0;
        for (double v : r_diamond) {
            dmin = std::min(dmin, v);
            dmax = std::max(dmax, v);
        }
        out.push_back(mk("ratio-diamond-bounded", "ratio-contrast", dmax / dmin <= 1.5,
                         dmax / dmin, 1.5,
                         "spread of the diamond contrast over N=4..13; pass if <= 1.5", gd));
        const double growth = r_sharp.back() / r_sharp.front();
        out.push_back(mk("ratio-sharp-growth", "ratio-contrast", growth >= 1.3, growth,
                         1.3, "sharp contrast at N=13 over N=4; pass if >= 1.3", gd));
        const double corr = pearson(r_sharp, pred);
        out.push_back(mk("ratio-sharp-correlation", "ratio-contrast", corr > 0.0, corr,
                         0.0,
                         "Pearson correlation of the sharp contrast with sqrt(N)/(log2 N + 1)",
                         gd));
    }

    if (cal) {
        double lo = kInf, hi = 0.0;
        for (const auto& [n, i] : row_of) {
            if (n > 13) continue;
            const double v = table.cell(i, "test_bnorm");
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const double blo = cal->get("fn_bnorm_lo"), bhi = cal->get("fn_bnorm_hi");
        out.push_back(mk("fn-bnorm-band-low", "ratio-contrast", lo >= blo, lo, blo,
                         "min rescaled-input norm over N<=13; pass if >= stored", gd));
        out.push_back(mk("fn-bnorm-band-high", "ratio-contrast", hi <= bhi, hi, bhi,
                         "max rescaled-input norm over N<=13; pass if <= stored", gd));
    }
    return out;
}

// --- dilation ---------------------------------------------------------------------

namespace {

enum class WindowOp { average, sharp, diamond };

// Strided re-evaluation of a window operator on the ORIGINAL samples:
// value at decimated center i, radius k, stride S. Written independently of
// the production prefix-sum/rank machinery on purpose.
double strided_value(const GridFunction& f, std::size_t S, std::size_t small_size,
                     std::size_t i, std::size_t k, WindowOp op) {
    const std::size_t M = f.size();
    const double len = static_cast<double>(2 * k + 1);
    auto at = [&](long long l) -> cplx {
        const std::size_t p =
            (static_cast<std::size_t>(static_cast<long long>(i + small_size) + l) %
             small_size);
        return f.samples[(p * S) % M];
    };
    if (op == WindowOp::average) {
        long double acc = 0.0L;
        for (long long l = -static_cast<long long>(k); l <= static_cast<long long>(k); ++l)
            acc += std::abs(at(l));
        return static_cast<double>(acc / len);
    }
    if (op == WindowOp::sharp) {
        std::complex<long double> mean(0.0L, 0.0L);
        for (long long l = -static_cast<long long>(k); l <= static_cast<long long>(k); ++l) {
            const cplx v = at(l);
            mean += std::complex<long double>(v.real(), v.imag());
        }
        mean /= static_cast<long double>(len);
        long double acc = 0.0L;
        for (long long l = -static_cast<long long>(k); l <= static_cast<long long>(k); ++l) {
            const cplx v = at(l);
            acc += std::abs(std::complex<long double>(v.real(), v.imag()) - mean);
        }
        return static_cast<double>(acc / len);
    }
    std::complex<long double> plus(0.0L, 0.0L), minus(0.0L, 0.0L);
    for (long long l = 1; l <= static_cast<long long>(k); ++l) {
        const cplx a = at(l), b = at(-l);
        plus += std::complex<long double>(a.real(), a.imag());
        minus += std::complex<long double>(b.real(), b.imag());
    }
    return static_cast<double>(std::abs(plus - minus) / len);
}

double strided_gap(const GridFunction& f, int m, const RadiiSet& divided, WindowOp op,
                   const MaximalResult& production) {
    const std::size_t S = std::size_t{1} << m;
    const std::size_t Ms = f.size() / S;
    double worst = 0.0;
    double scale = std::max(sup_abs(production.values), 1.0);
    for (std::size_t i = 0; i < Ms; ++i) {
        double best = -1.0;
        for (std::size_t k : divided.indices)
            best = std::max(best, strided_value(f, S, Ms, i, k, op));
        best = std::max(best, 0.0);
        worst = std::max(worst,
                         std::fabs(best - production.values.samples[i].real()) / scale);
    }
    return worst;
}

} // namespace

std::vector<CheckReport> dilation_lemma_check(const Profile& profile,
                                              const Calibration* cal,
                                              std::uint64_t seed) {
    std::vector<CheckReport> out;

    // exact strided commutation on a fixed small grid
    const TorusGrid gc = make_grid(16.0, 4096);
    {
        std::vector<GridFunction> corpus;
        const double top = std::exp2(gc.band_limit_index() - 3);
        corpus.push_back(random_band_limited(gc, seed, top));
        corpus.push_back(random_band_limited(gc, seed + 1, top));
        auto adv = adversarial_corpus(gc);
        corpus.push_back(adv[0]);
        corpus.push_back(adv[1]);
        corpus.push_back(make_FN(gc, std::min(5, max_admissible_terms(gc))));

        const auto radii = dyadic_radii(gc);
        double worst[3] = {0.0, 0.0, 0.0};
        for (const auto& f : corpus) {
            for (int m = 0; m <= 3; ++m) {
                GridFunction g = dilate_dyadic(f, m);
                const auto divided = divide_radii(radii, m);
                const auto avg = hardy_littlewood(g, divided);
                const auto sh = sharp_maximal(g, divided);
                const auto di = diamond_maximal(g, divided);
                worst[0] = std::max(worst[0], strided_gap(f, m, divided, WindowOp::average, avg));
                worst[1] = std::max(worst[1], strided_gap(f, m, divided, WindowOp::sharp, sh));
                worst[2] = std::max(worst[2], strided_gap(f, m, divided, WindowOp::diamond, di));
            }
        }
        const char* names[3] = {"dilation-commute-average", "dilation-commute-sharp",
                                "dilation-commute-diamond"};
        for (int op = 0; op < 3; ++op)
            out.push_back(mk(names[op], "dilation-commute-strided", worst[op] <= 1e-12,
                             worst[op], 1e-12,
                             "operator after decimation vs independent strided windows on "
                             "the original samples; m=0..3, dyadic radii, random + step + "
                             "spike + lacunary-envelope corpus",
                             desc(gc), radius_cap_note(gc)));
    }

    // full-window mismatch is quadrature: it shrinks under grid refinement
    {
        auto gap_at = [&](std::size_t M) {
            const TorusGrid g = make_grid(16.0, M);
            GridFunction f = make_FN(g, 3);
            const std::size_t k = M / 64; // physical radius 1/4
            const auto r_full = radii_from_list(g, {k});
            const auto r_half = radii_from_list(make_grid(8.0, M / 2), {k / 2});
            GridFunction lhs = sharp_maximal(dilate_dyadic(f, 1), r_half).values;
            GridFunction rhs = dilate_dyadic(sharp_maximal(f, r_full).values, 1);
            return sup_diff(lhs, rhs);
        };
        const double g1 = gap_at(4096), g2 = gap_at(8192);
        const double ratio = g1 / g2;
        out.push_back(mk("dilation-commute-quadrature", "dilation-commute-quadrature",
                         ratio >= 1.5 && ratio <= 8.0, ratio, 1.5,
                         "full-window residual ratio between grid sizes 4096 and 8192; "
                         "a quadrature artifact shrinks under refinement (band [1.5, 8])",
                         "16,4096"));
    }

    // norm growth bounds in both directions
    {
        const TorusGrid gb =
            make_grid(16.0, std::min<std::size_t>(profile.size, std::size_t{1} << 16));
        std::vector<GridFunction> corpus;
        const double top = std::exp2(gb.band_limit_index() - 3);
        corpus.push_back(random_band_limited(gb, seed + 11, top));
        corpus.push_back(random_band_limited(gb, seed + 12, top));
        corpus.push_back(make_FN(gb, std::min(4, max_admissible_terms(gb))));
        corpus.push_back(bump_psi(gb));

        double worst_up = 0.0, worst_down = 0.0;
        int down_skipped = 0; // stretch needs band-limit headroom the grid may lack
        for (const auto& f : corpus) {
            const double base = besov_norm(f).besov_part;
            for (int m = 0; m <= 3; ++m) {
                const double up = besov_norm(dilate_dyadic(f, m)).besov_part;
                worst_up = std::max(worst_up, up / base);
                try {
                    const double down = besov_norm(dilate_dyadic(f, -m)).besov_part;
                    worst_down = std::max(worst_down, down / (base * (m + 1)));
                } catch (const admissibility_error&) {
                    ++down_skipped;
                }
            }
        }
        const double bup = cal ? cal->get("c_dil_plus") : kInf;
        const double bdown = cal ? cal->get("c_dil_minus") : kInf;
        out.push_back(mk("dilation-besov-up", "dilation-besov-bounds",
                         worst_up <= bup, worst_up, bup,
                         "max over corpus, m=0..3 of norm(compressed)/norm(f); pass if <= stored",
                         desc(gb)));
        std::string down_ctx =
            "max over corpus, m=0..3 of norm(stretched)/((m+1)*norm(f)); pass if <= stored";
        if (down_skipped > 0)
            down_ctx += "; " + std::to_string(down_skipped) +
                        " stretch directions skipped (content too close to nyquist here)";
        out.push_back(mk("dilation-besov-down", "dilation-besov-bounds",
                         worst_down <= bdown, worst_down, bdown, down_ctx, desc(gb)));
    }

    return out;
}

// --- oracle equivalence --------------------------------------------------------------

std::vector<CheckReport> oracle_equivalence_check(std::uint64_t seed) {
    double worst[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
    std::string grids;

    for (std::size_t M : {std::size_t{32}, std::size_t{64}}) {
        const TorusGrid g = make_grid(2.0, M);
        grids += (grids.empty() ? "" : " & ") + desc(g);

        std::vector<GridFunction> corpus = adversarial_corpus(g);
        corpus.push_back(random_band_limited(g, seed + M, g.nyquist() / 2.0));
        corpus.push_back(random_band_limited(g, seed + M + 1, g.nyquist() / 2.0));
        {
            GridFunction re = random_band_limited(g, seed + M + 2, g.nyquist() / 2.0);
            GridFunction im = random_band_limited(g, seed + M + 3, g.nyquist() / 2.0);
            GridFunction f = re;
            for (std::size_t i = 0; i < M; ++i)
                f.samples[i] = cplx(re.samples[i].real(), im.samples[i].real());
            f.is_real = false;
            corpus.push_back(f);
        }

        const auto radii = all_radii(g);
        const Kernel kernels[3] = {diamond_kernel(), box_kernel(), smooth_test_kernel()};
        for (const auto& f : corpus) {
            auto gap = [&](const MaximalResult& a, const MaximalResult& b) {
                return sup_diff(a.values, b.values) / std::max(sup_abs(b.values), 1.0);
            };
            worst[0] = std::max(worst[0], gap(hardy_littlewood(f, radii),
                                              hardy_littlewood_direct(f, radii)));
            worst[1] = std::max(worst[1], gap(sharp_maximal(f, radii),
                                              sharp_maximal_direct(f, radii)));
            worst[2] = std::max(worst[2], gap(diamond_maximal(f, radii),
                                              diamond_maximal_direct(f, radii)));
            for (const auto& k : kernels)
                worst[3] = std::max(worst[3], gap(tk_star(f, k, radii),
                                                  tk_star_direct(f, k, radii)));
            for (std::size_t k = 1; k <= M / 2 - 1; ++k) {
                GridFunction avg = ball_average(f, k);
                const double len = static_cast<double>(2 * k + 1);
                double w = 0.0;
                for (std::size_t i = 0; i < M; ++i) {
                    std::complex<long double> acc(0.0L, 0.0L);
                    for (long long l = -static_cast<long long>(k);
                         l <= static_cast<long long>(k); ++l) {
                        const auto& v =
                            f.samples[(i + M + static_cast<std::size_t>(
                                                   l + static_cast<long long>(M))) %
                                      M];
                        acc += std::complex<long double>(v.real(), v.imag());
                    }
                    w = std::max(w, static_cast<double>(std::abs(
                                        std::complex<long double>(avg.samples[i].real(),
                                                                  avg.samples[i].imag()) -
                                        acc / static_cast<long double>(len))));
                }
                worst[4] = std::max(worst[4], w / std::max(sup_abs(f), 1.0));
            }
        }
    }

    const struct {
        const char* name;
        double bound;
    } defs[5] = {{"oracle-average", 1e-12},
                 {"oracle-sharp", 1e-12},
                 {"oracle-diamond", 1e-12},
                 {"oracle-kernel-maximal", 1e-10},
                 {"oracle-ball-average", 1e-12}};
    std::vector<CheckReport> out;
    for (int i = 0; i < 5; ++i)
        out.push_back(mk(defs[i].name, "oracle-equivalence", worst[i] <= defs[i].bound,
                         worst[i], defs[i].bound,
                         "production vs brute-force evaluation, every integer radius, "
                         "step/spike/random/complex corpus",
                         grids, "r<=period/4"));
    return out;
}

// --- mollifier and embedding -----------------------------------------------------------

namespace {

double kernel_embedding_sum(const TorusGrid& g) {
    const int jmax = g.band_limit_index();
    auto l1_of = [&](MultKind kind, int j) {
        GridFunction h = kernel_from_multiplier(g, *multiplier_values(g, kind, j));
        return norm(h, Norm::l1);
    };
    double worst_band = 0.0;
    for (int j = 1; j <= jmax; ++j) worst_band = std::max(worst_band, l1_of(MultKind::band, j));
    return l1_of(MultKind::low, 0) + worst_band;
}

} // namespace

std::vector<CheckReport> mollifier_embedding_check(const Profile& profile,
                                                   const Calibration* cal,
                                                   std::uint64_t seed) {
    const TorusGrid g =
        make_grid(16.0, std::min<std::size_t>(profile.size, std::size_t{1} << 14));
    const double dx = g.spacing();
    const double top = std::exp2(g.band_limit_index() - 2);

    double worst_mean = 0.0, worst_smooth = 0.0, worst_embed = 0.0;
    for (int i = 0; i < 100; ++i) {
        GridFunction f = random_band_limited(g, seed + static_cast<std::uint64_t>(i), top);
        const double b = besov_norm(f).besov_part;
        const double sup = sup_abs(f);
        GridFunction s = mollifier_apply(f);

        long double m_in = 0.0L, m_out = 0.0L;
        for (std::size_t p = 0; p < g.size; ++p) {
            m_in += f.samples[p].real();
            m_out += s.samples[p].real();
        }
        worst_mean = std::max(worst_mean,
                              std::fabs(static_cast<double>((m_out - m_in)) * dx));
        worst_smooth = std::max(worst_smooth, sup_abs(s) / b);
        worst_embed = std::max(worst_embed, b / sup);
    }

    const double ksum = kernel_embedding_sum(g);

    std::vector<CheckReport> out;
    out.push_back(mk("mollifier-mean", "mollifier-bound", worst_mean <= 1e-10, worst_mean,
                     1e-10, "max |mean(smoothed) - mean(f)| over 100 random inputs",
                     desc(g)));
    const double crho = cal ? cal->get("c_rho") : kInf;
    out.push_back(mk("mollifier-besov-domination", "mollifier-bound",
                     worst_smooth <= crho, worst_smooth, crho,
                     "max ||smoothed||_inf / dyadic-sup norm over the corpus; pass if <= stored",
                     desc(g)));
    const double cemb = cal ? cal->get("c_emb") : kInf;
    out.push_back(mk("besov-embedding-corpus", "besov-embedding", worst_embed <= cemb,
                     worst_embed, cemb,
                     "max dyadic-sup norm / sup norm over the corpus; pass if <= stored",
                     desc(g)));
    out.push_back(mk("besov-embedding-kernels", "besov-embedding", ksum <= cemb, ksum,
                     cemb,
                     "L1(low kernel) + max L1(band kernel); the Young bound behind the "
                     "corpus check",
                     desc(g)));
    return out;
}

// --- suite -------------------------------------------------------------------------------

bool SuiteResult::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

SuiteResult run_suite(const Profile& profile, const Calibration& cal,
                      std::uint64_t seed, int workers) {
    SuiteResult res;
    auto add = [&res](std::vector<CheckReport> v) {
        for (auto& r : v) res.checks.push_back(std::move(r));
    };

    add(check_domination(profile, 100, seed));
    add(check_projection_algebra(profile, seed));

    ScanTable kd = kernel_decay_scan(profile, diamond_kernel());
    add(evaluate_kernel_decay(kd, &cal));
    kd.seed = seed;
    res.tables.push_back(std::move(kd));

    ScanTable lp = lp_kernel_facts(profile);
    add(evaluate_lp_kernel_facts(lp));
    lp.seed = seed;
    res.tables.push_back(std::move(lp));

    ScanTable gl = glambda_scan(profile);
    add(evaluate_glambda(gl, &cal));
    gl.seed = seed;
    res.tables.push_back(std::move(gl));

    const int cap = max_admissible_terms(profile.grid());
    ScanTable rs = ratio_scan(profile, 1, std::min(15, cap), workers);
    add(evaluate_ratio(rs, &cal));
    rs.seed = seed;
    res.tables.push_back(std::move(rs));

    add(dilation_lemma_check(profile, &cal, seed));
    add(oracle_equivalence_check(seed));
    add(mollifier_embedding_check(profile, &cal, seed));
    return res;
}

Calibration measure_calibration(std::uint64_t seed, int workers) {
    const Profile ref = profile_by_name("reference");
    Calibration cal;
    cal.version = 1;

    {
        ScanTable kd = kernel_decay_scan(ref, diamond_kernel());
        double worst = 0.0;
        for (std::size_t i = 0; i < kd.rows.size(); ++i)
            worst = std::max(worst, kd.cell(i, "ratio"));
        cal.values["kernel_decay_ratio"] = 1.5 * worst;
    }
    {
        ScanTable gl = glambda_scan(ref);
        double band = 0.0, low = 0.0;
        for (std::size_t i = 0; i < gl.rows.size(); ++i) {
            if (gl.cell(i, "j") >= 1.0)
                band = std::max(band, gl.cell(i, "ratio"));
            else if (gl.cell(i, "lambda") >= 4.0)
                low = std::max(low, gl.cell(i, "ratio"));
        }
        cal.values["glambda_band_ratio"] = 1.5 * band;
        cal.values["glambda_low_ratio"] = 1.5 * low;
    }
    {
        ScanTable rs = ratio_scan(ref, 1, 13, workers);
        double core_lo = kInf, b_lo = kInf, b_hi = 0.0;
        for (std::size_t i = 0; i < rs.rows.size(); ++i) {
            const int n = static_cast<int>(rs.cell(i, "n"));
            if (n >= 4) core_lo = std::min(core_lo, rs.cell(i, "core_min_over_sqrt"));
            b_lo = std::min(b_lo, rs.cell(i, "test_bnorm"));
            b_hi = std::max(b_hi, rs.cell(i, "test_bnorm"));
        }
        cal.values["msharp_core_lb"] = core_lo / 1.5;
        cal.values["fn_bnorm_lo"] = b_lo / 1.5;
        cal.values["fn_bnorm_hi"] = 1.5 * b_hi;
    }
    {
        auto dil = dilation_lemma_check(ref, nullptr, seed);
        cal.values["c_dil_plus"] = 1.5 * find_report(dil, "dilation-besov-up").observed;
        cal.values["c_dil_minus"] = 1.5 * find_report(dil, "dilation-besov-down").observed;
    }
    {
        auto moll = mollifier_embedding_check(ref, nullptr, seed);
        cal.values["c_rho"] =
            1.5 * find_report(moll, "mollifier-besov-domination").observed;
        const double ksum = find_report(moll, "besov-embedding-kernels").observed;
        const double corpus = find_report(moll, "besov-embedding-corpus").observed;
        cal.values["c_emb"] = 1.5 * std::max(ksum, corpus);
    }
    return cal;
}

} // namespace maxlp
