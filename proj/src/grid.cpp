#include "maxlp/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "maxlp/errors.hpp"

namespace maxlp {
namespace {

bool is_pow2_double(double v) {
    if (v <= 0.0) return false;
    int e = 0;
    return std::frexp(v, &e) == 0.5;
}

int ilog2(std::size_t v) { return std::bit_width(v) - 1; }

using cld = std::complex<long double>;

// circular prefix sums; P[i] = sum of f[0..i-1]
std::vector<cld> prefix_sums(const std::vector<cplx>& f) {
    std::vector<cld> p(f.size() + 1);
    p[0] = cld(0.0L, 0.0L);
    for (std::size_t i = 0; i < f.size(); ++i)
        p[i + 1] = p[i] + cld(f[i].real(), f[i].imag());
    return p;
}

// sum of f over circular index window [lo, lo+len), 0 <= lo < M, len <= M
cld window_sum(const std::vector<cld>& p, std::size_t lo, std::size_t len) {
    const std::size_t m = p.size() - 1;
    if (lo + len <= m) return p[lo + len] - p[lo];
    return (p[m] - p[lo]) + p[lo + len - m];
}

} // namespace

int TorusGrid::band_limit_index() const {
    // size/(2*period) is a power of two by construction
    double ratio = static_cast<double>(size) / (2.0 * period);
    return static_cast<int>(std::lround(std::log2(ratio))) - 1;
}

TorusGrid make_grid(double period, std::size_t size) {
    if (!is_pow2_double(period) || period < 2.0)
        throw config_error("period must be a power of two >= 2");
    if (!std::has_single_bit(size) || size < 16)
        throw config_error("size must be a power of two >= 16");
    return TorusGrid{period, size};
}

GridFunction zeros(const TorusGrid& grid) {
    return GridFunction{grid, std::vector<cplx>(grid.size, cplx(0.0, 0.0)), true};
}

GridFunction sample_real(const TorusGrid& grid, const std::function<double(double)>& f) {
    GridFunction out = zeros(grid);
    for (std::size_t i = 0; i < grid.size; ++i)
        out.samples[i] = cplx(f(grid.abscissa(i)), 0.0);
    return out;
}

GridFunction sample_complex(const TorusGrid& grid, const std::function<cplx(double)>& f) {
    GridFunction out = zeros(grid);
    out.is_real = false;
    for (std::size_t i = 0; i < grid.size; ++i)
        out.samples[i] = f(grid.abscissa(i));
    return out;
}

GridFunction multiply(const GridFunction& a, const GridFunction& b) {
    if (!(a.grid == b.grid)) throw config_error("multiply: grids differ");
    GridFunction out = a;
    for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] *= b.samples[i];
    out.is_real = a.is_real && b.is_real;
    return out;
}

double norm(const GridFunction& f, Norm which) {
    const long double dx = static_cast<long double>(f.grid.spacing());
    switch (which) {
        case Norm::l1: {
            long double s = 0.0L;
            for (const auto& z : f.samples) s += std::abs(cld(z.real(), z.imag()));
            return static_cast<double>(dx * s);
        }
        case Norm::l2: {
            long double s = 0.0L;
            for (const auto& z : f.samples)
                s += static_cast<long double>(z.real()) * z.real() +
                     static_cast<long double>(z.imag()) * z.imag();
            return static_cast<double>(std::sqrt(dx * s));
        }
        case Norm::linf: {
            double s = 0.0;
            for (const auto& z : f.samples) s = std::max(s, std::abs(z));
            return s;
        }
    }
    throw config_error("norm: unknown kind");
}

GridFunction circular_shift(const GridFunction& f, long long s) {
    const long long m = static_cast<long long>(f.size());
    GridFunction out = f;
    for (long long i = 0; i < m; ++i) {
        long long src = (i - s) % m;
        if (src < 0) src += m;
        out.samples[static_cast<std::size_t>(i)] = f.samples[static_cast<std::size_t>(src)];
    }
    return out;
}

GridFunction ball_average(const GridFunction& f, std::size_t k) {
    const std::size_t m = f.size();
    if (k < 1 || k > m / 2 - 1)
        throw admissibility_error("ball_average: radius index k must satisfy 1 <= k <= M/2 - 1, got k=" +
                                  std::to_string(k));
    auto p = prefix_sums(f.samples);
    GridFunction out = zeros(f.grid);
    out.is_real = f.is_real;
    const std::size_t len = 2 * k + 1;
    const long double inv = 1.0L / static_cast<long double>(len);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t lo = (i + m - k) % m;
        cld s = window_sum(p, lo, len) * inv;
        out.samples[i] = cplx(static_cast<double>(s.real()), static_cast<double>(s.imag()));
    }
    return out;
}

GridFunction dilate_dyadic(const GridFunction& f, int m) {
    const std::size_t M = f.size();
    if (m == 0) return f;
    if (m > 0) {
        if (m > ilog2(M))
            throw admissibility_error("dilate: m exceeds log2(size)");
        const std::size_t S = std::size_t{1} << m;
        if (M / S < 16 || f.grid.period / static_cast<double>(S) < 2.0)
            throw admissibility_error(
                "dilate: output grid would be smaller than the (period>=2, size>=16) minimum");
        TorusGrid g = make_grid(f.grid.period / static_cast<double>(S), M / S);
        GridFunction out = zeros(g);
        out.is_real = f.is_real;
        for (std::size_t i = 0; i < g.size; ++i) out.samples[i] = f.samples[(S * i) % M];
        return out;
    }
    // m < 0: stretch by S via spectral zero-padding; exact for band-limited f
    const int am = -m;
    if (am > 24) throw admissibility_error("dilate: |m| too large");
    const std::size_t S = std::size_t{1} << am;
    const double cutoff = f.grid.nyquist() / static_cast<double>(S);

    std::vector<cplx> spec = f.samples;
    fft_forward(spec);
    long double total = 0.0L, high = 0.0L;
    const double ql = f.grid.period * cutoff; // |signed bin| >= ql is out of band
    for (std::size_t q = 0; q < M; ++q) {
        long double e = static_cast<long double>(std::norm(spec[q]));
        total += e;
        if (std::llabs(signed_bin(q, M)) >= static_cast<long long>(std::llround(ql))) high += e;
    }
    if (total > 0.0L && std::sqrt(static_cast<double>(high / total)) > 1e-9)
        throw admissibility_error(
            "dilate: input not band-limited to |xi| < size/(2*period*2^|m|); "
            "relative out-of-band mass " +
            std::to_string(std::sqrt(static_cast<double>(high / total))));

    TorusGrid g = make_grid(f.grid.period * static_cast<double>(S), M * S);
    std::vector<cplx> big(g.size, cplx(0.0, 0.0));
    const double scale = static_cast<double>(S);
    for (std::size_t q = 0; q < M; ++q) {
        long long sq = signed_bin(q, M);
        if (std::llabs(sq) >= static_cast<long long>(M / 2)) continue; // drop Nyquist bin (out of band anyway)
        std::size_t qq = sq >= 0 ? static_cast<std::size_t>(sq)
                                 : g.size - static_cast<std::size_t>(-sq);
        big[qq] = spec[q] * scale;
    }
    fft_inverse(big);
    GridFunction out{g, std::move(big), f.is_real};
    if (f.is_real)
        for (auto& z : out.samples) z = cplx(z.real(), 0.0);
    return out;
}

RadiiSet dyadic_radii(const TorusGrid& grid) {
    RadiiSet r;
    r.dyadic_closed = true;
    r.description = "dyadic";
    for (std::size_t k = 1; k <= grid.size / 4; k *= 2) r.indices.push_back(k);
    return r;
}

RadiiSet all_radii(const TorusGrid& grid) {
    if (grid.size > 512)
        throw admissibility_error("all-integer radii is an oracle mode for size <= 512");
    RadiiSet r;
    r.dyadic_closed = false;
    r.description = "all";
    for (std::size_t k = 1; k <= grid.size / 4; ++k) r.indices.push_back(k);
    return r;
}

RadiiSet radii_from_list(const TorusGrid& grid, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.empty()) throw config_error("radii list is empty");
    if (indices.front() < 1 || indices.back() > grid.size / 2 - 1)
        throw admissibility_error("radii must satisfy 1 <= k <= M/2 - 1");
    RadiiSet r;
    r.indices = std::move(indices);
    r.dyadic_closed = false;
    r.description = "list";
    return r;
}

RadiiSet divide_radii(const RadiiSet& radii, int m) {
    if (m < 0) throw config_error("divide_radii: m must be >= 0");
    const std::size_t S = std::size_t{1} << m;
    RadiiSet out;
    out.dyadic_closed = radii.dyadic_closed;
    out.description = radii.description;
    for (std::size_t k : radii.indices)
        if (k % S == 0 && k / S >= 1) out.indices.push_back(k / S);
    if (out.indices.empty())
        throw admissibility_error("divide_radii: no radius survives division by 2^" +
                                  std::to_string(m));
    return out;
}

std::string radius_cap_note(const TorusGrid& grid) {
    return "r<=period/4 (k<=" + std::to_string(grid.size / 4) + ")";
}

} // namespace maxlp
