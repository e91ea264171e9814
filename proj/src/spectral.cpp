#include "maxlp/spectral.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "maxlp/errors.hpp"
#include "maxlp/fft.hpp"

namespace maxlp {
namespace {

double smooth_step_piece(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

using MultKey = std::tuple<double, std::size_t, int, int>;

std::shared_mutex g_mult_mutex;
std::map<MultKey, std::shared_ptr<const std::vector<double>>> g_mult_cache;

int validate_band_index(const TorusGrid& grid, MultKind kind, int j) {
    if (kind == MultKind::low) return j;
    const int jmax = grid.band_limit_index();
    if (j < 1 || j > jmax)
        throw admissibility_error("band index j=" + std::to_string(j) +
                                  " outside [1, " + std::to_string(jmax) +
                                  "] for this grid");
    return j;
}

std::vector<double> build_multiplier(const TorusGrid& grid, MultKind kind, int j) {
    std::vector<double> m(grid.size);
    for (std::size_t q = 0; q < grid.size; ++q) {
        double axi = std::abs(static_cast<double>(signed_bin(q, grid.size))) / grid.period;
        switch (kind) {
            case MultKind::low:
                m[q] = phi(axi / std::exp2(j));
                break;
            case MultKind::band:
                m[q] = phi(axi / std::exp2(j)) - phi(axi / std::exp2(j - 1));
                break;
            case MultKind::widened:
                m[q] = phi(axi / std::exp2(j + 1)) - phi(axi / std::exp2(j - 2));
                break;
        }
    }
    return m;
}

} // namespace

double phi(double t) {
    if (t <= 1.0) return 1.0;
    if (t >= 2.0) return 0.0;
    double a = smooth_step_piece(2.0 - t);
    double b = smooth_step_piece(t - 1.0);
    return a / (a + b);
}

std::shared_ptr<const std::vector<double>> multiplier_values(const TorusGrid& grid,
                                                             MultKind kind, int j) {
    validate_band_index(grid, kind, j);
    MultKey key{grid.period, grid.size, static_cast<int>(kind), j};
    {
        std::shared_lock lk(g_mult_mutex);
        auto it = g_mult_cache.find(key);
        if (it != g_mult_cache.end()) return it->second;
    }
    auto built = std::make_shared<const std::vector<double>>(build_multiplier(grid, kind, j));
    std::unique_lock lk(g_mult_mutex);
    auto [it, inserted] = g_mult_cache.emplace(key, built);
    return it->second;
}

GridFunction project(const GridFunction& f, MultKind kind, int j) {
    auto mult = multiplier_values(f.grid, kind, j);
    std::vector<cplx> spec = f.samples;
    fft_forward(spec);
    for (std::size_t q = 0; q < spec.size(); ++q) spec[q] *= (*mult)[q];
    fft_inverse(spec);
    GridFunction out{f.grid, std::move(spec), f.is_real};
    if (f.is_real)
        for (auto& z : out.samples) z = cplx(z.real(), 0.0);
    return out;
}

namespace {

// sup norm of ifft(mult .* spec); one inverse transform per call
double filtered_sup(const std::vector<cplx>& spec, const std::vector<double>& mult) {
    std::vector<cplx> work(spec.size());
    for (std::size_t q = 0; q < spec.size(); ++q) work[q] = spec[q] * mult[q];
    fft_inverse(work);
    double s = 0.0;
    for (const auto& z : work) s = std::max(s, std::abs(z));
    return s;
}

} // namespace

BesovReport besov_norm(const GridFunction& f) {
    BesovReport rep;
    std::vector<cplx> spec = f.samples;
    fft_forward(spec);
    rep.j_max = f.grid.band_limit_index();
    rep.low_band = filtered_sup(spec, *multiplier_values(f.grid, MultKind::low, 0));
    double best = 0.0;
    for (int j = 1; j <= rep.j_max; ++j) {
        double v = filtered_sup(spec, *multiplier_values(f.grid, MultKind::band, j));
        rep.bands.emplace_back(j, v);
        best = std::max(best, v);
    }
    rep.besov_part = rep.low_band + best;
    return rep;
}

BNormReport b_norm(const GridFunction& f) {
    BNormReport rep;
    rep.besov = besov_norm(f);
    rep.l2_part = norm(f, Norm::l2);
    rep.total = rep.besov.besov_part + rep.l2_part;
    return rep;
}

double telescope_residual(const GridFunction& f, int J) {
    GridFunction acc = project(f, MultKind::low, 0);
    for (int j = 1; j <= J; ++j) {
        GridFunction pj = project(f, MultKind::band, j);
        for (std::size_t i = 0; i < acc.samples.size(); ++i)
            acc.samples[i] += pj.samples[i];
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < acc.samples.size(); ++i)
        worst = std::max(worst, std::abs(f.samples[i] - acc.samples[i]));
    return worst;
}

GridFunction mollifier(const TorusGrid& grid) {
    if (grid.period < 4.0)
        throw admissibility_error("mollifier: period must be >= 4 so the unit bump fits");
    GridFunction rho = sample_real(grid, [](double x) {
        double u = 1.0 - x * x;
        return u > 0.0 ? std::exp(-1.0 / u) : 0.0;
    });
    long double mass = 0.0L;
    for (const auto& z : rho.samples) mass += static_cast<long double>(z.real());
    mass *= static_cast<long double>(grid.spacing());
    const double c = 1.0 / static_cast<double>(mass);
    for (auto& z : rho.samples) z *= c;
    return rho;
}

GridFunction mollifier_apply(const GridFunction& f) {
    return convolve(f, mollifier(f.grid));
}

GridFunction kernel_from_multiplier(const TorusGrid& grid,
                                    const std::vector<double>& mult) {
    if (mult.size() != grid.size)
        throw config_error("kernel_from_multiplier: multiplier length != grid size");
    std::vector<cplx> spec(grid.size);
    for (std::size_t q = 0; q < grid.size; ++q) {
        double sgn = (q & 1) ? -1.0 : 1.0;
        spec[q] = cplx(mult[q] * sgn, 0.0);
    }
    fft_inverse(spec);
    const double inv_dx = 1.0 / grid.spacing();
    GridFunction out{grid, std::move(spec), true};
    for (auto& z : out.samples) z = cplx(z.real() * inv_dx, 0.0);
    return out;
}

GridFunction spectral_derivative(const GridFunction& f) {
    std::vector<cplx> spec = f.samples;
    fft_forward(spec);
    const std::size_t M = f.size();
    for (std::size_t q = 0; q < M; ++q) {
        if (q == M / 2) {
            spec[q] = cplx(0.0, 0.0); // unpaired bin carries no usable derivative
            continue;
        }
        double xi = static_cast<double>(signed_bin(q, M)) / f.grid.period;
        spec[q] *= cplx(0.0, 2.0 * std::acos(-1.0) * xi);
    }
    fft_inverse(spec);
    GridFunction out{f.grid, std::move(spec), f.is_real};
    if (f.is_real)
        for (auto& z : out.samples) z = cplx(z.real(), 0.0);
    return out;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid == g.grid)) throw config_error("convolve: grids differ");
    std::vector<cplx> a = f.samples, b = g.samples;
    fft_forward(a);
    fft_forward(b);
    const double dx = f.grid.spacing();
    // g is stored on centered abscissas; rotating its origin to index 0 is a
    // (-1)^q twist in frequency, which makes the output line up with f's grid
    for (std::size_t q = 0; q < a.size(); ++q)
        a[q] *= b[q] * (dx * ((q & 1) ? -1.0 : 1.0));
    fft_inverse(a);
    GridFunction out{f.grid, std::move(a), f.is_real && g.is_real};
    if (out.is_real)
        for (auto& z : out.samples) z = cplx(z.real(), 0.0);
    return out;
}

} // namespace maxlp
