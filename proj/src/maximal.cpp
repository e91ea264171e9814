#include "maxlp/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "maxlp/errors.hpp"
#include "maxlp/fft.hpp"

namespace maxlp {
namespace {

using cld = std::complex<long double>;

std::vector<cld> prefix_sums(const std::vector<cplx>& f) {
    std::vector<cld> p(f.size() + 1);
    p[0] = cld(0.0L, 0.0L);
    for (std::size_t i = 0; i < f.size(); ++i)
        p[i + 1] = p[i] + cld(f[i].real(), f[i].imag());
    return p;
}

cld window_sum(const std::vector<cld>& p, std::size_t lo, std::size_t len) {
    const std::size_t m = p.size() - 1;
    if (lo + len <= m) return p[lo + len] - p[lo];
    return (p[m] - p[lo]) + p[lo + len - m];
}

std::vector<std::size_t> ascending_radii(const GridFunction& f, const RadiiSet& radii) {
    const std::size_t m = f.size();
    std::vector<std::size_t> ks = radii.indices;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.empty()) throw config_error("empty radius set");
    if (ks.front() < 1 || ks.back() > m / 2 - 1)
        throw admissibility_error("radius index outside [1, M/2 - 1]");
    return ks;
}

// ascending-k merge with strict >, so ties keep the smallest radius
void merge_best(std::vector<double>& best, std::vector<std::uint32_t>& arg,
                const std::vector<double>& vals, std::size_t k,
                std::size_t lo, std::size_t hi) {
    const auto kk = static_cast<std::uint32_t>(k);
    for (std::size_t i = lo; i <= hi; ++i) {
        if (vals[i] > best[i]) {
            best[i] = vals[i];
            arg[i] = kk;
        }
    }
}

MaximalResult pack_result(const GridFunction& f, const RadiiSet& radii,
                          std::vector<double>&& best, std::vector<std::uint32_t>&& arg) {
    MaximalResult r;
    r.values = zeros(f.grid);
    for (std::size_t i = 0; i < best.size(); ++i)
        r.values.samples[i] = cplx(std::max(best[i], 0.0), 0.0);
    r.argmax_radius = std::move(arg);
    r.radii = radii;
    r.cap_note = radius_cap_note(f.grid);
    return r;
}

struct Fenwick {
    struct Node {
        long double sum;
        long long cnt;
    };
    std::size_t n;
    std::vector<Node> node;
    explicit Fenwick(std::size_t n_) : n(n_), node(n_ + 1, Node{0.0L, 0}) {}
    void clear() { std::fill(node.begin(), node.end(), Node{0.0L, 0}); }
    void add(std::size_t pos, long long c, long double v) {
        for (std::size_t i = pos + 1; i <= n; i += i & (~i + 1)) {
            node[i].cnt += c;
            node[i].sum += v;
        }
    }
    void prefix(std::size_t stop, long long& c, long double& s) const {
        c = 0;
        s = 0.0L;
        for (std::size_t i = stop; i > 0; i -= i & (~i + 1)) {
            c += node[i].cnt;
            s += node[i].sum;
        }
    }
};

MaximalResult sharp_real_ranked(const GridFunction& f, const RadiiSet& radii,
                                std::size_t lo, std::size_t hi) {
    const std::size_t m = f.size();
    auto ks = ascending_radii(f, radii);

    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = f.samples[i].real();

    // one rank slot per sample; slots ordered by (value, index)
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return v[a] != v[b] ? v[a] < v[b] : a < b;
    });
    std::vector<std::size_t> slot_of(m);
    std::vector<double> sv(m);
    for (std::size_t t = 0; t < m; ++t) {
        slot_of[order[t]] = t;
        sv[t] = v[order[t]];
    }

    std::vector<cld> p = prefix_sums(f.samples);
    std::vector<double> best(m, -1.0);
    std::vector<std::uint32_t> arg(m, 0);
    std::vector<double> vals(m, 0.0);
    Fenwick fw(m);

    // unwrapped copy so small-radius windows are contiguous scans
    std::vector<double> ext(3 * m);
    for (std::size_t i = 0; i < 3 * m; ++i) ext[i] = v[i % m];
    const double direct_budget = 2.5e8;

    for (std::size_t k : ks) {
        const std::size_t len = 2 * k + 1;
        const long double inv_len = 1.0L / static_cast<long double>(len);
        const double span = static_cast<double>(hi - lo + 1);
        if (static_cast<double>(len) * span <= direct_budget) {
            for (std::size_t c = lo; c <= hi; ++c) {
                const long double sw = window_sum(p, (c + m - k) % m, len).real();
                const long double a = sw * inv_len;
                long double dev = 0.0L;
                const std::size_t start = c + m - k;
                for (std::size_t j = 0; j < len; ++j) {
                    long double d = static_cast<long double>(ext[start + j]) - a;
                    dev += d < 0.0L ? -d : d;
                }
                vals[c] = static_cast<double>(dev * inv_len);
            }
        } else {
            fw.clear();
            for (std::size_t j = 0; j < len; ++j) {
                std::size_t idx = (lo + m - k + j) % m;
                fw.add(slot_of[idx], 1, static_cast<long double>(v[idx]));
            }
            for (std::size_t c = lo; c <= hi; ++c) {
                if (c > lo) {
                    std::size_t out = (c - 1 + m - k) % m;
                    std::size_t in = (c + k) % m;
                    fw.add(slot_of[out], -1, -static_cast<long double>(v[out]));
                    fw.add(slot_of[in], 1, static_cast<long double>(v[in]));
                }
                const long double sw = window_sum(p, (c + m - k) % m, len).real();
                const long double a = sw * inv_len;
                const std::size_t stop = static_cast<std::size_t>(
                    std::upper_bound(sv.begin(), sv.end(), a,
                                     [](long double lhs, double rhs) {
                                         return lhs < static_cast<long double>(rhs);
                                     }) -
                    sv.begin());
                long long n_le = 0;
                long double s_le = 0.0L;
                fw.prefix(stop, n_le, s_le);
                const long double dev = (a * n_le - s_le) +
                                        ((sw - s_le) - a * (static_cast<long double>(len) - n_le));
                vals[c] = static_cast<double>(dev * inv_len);
            }
        }
        merge_best(best, arg, vals, k, lo, hi);
    }
    return pack_result(f, radii, std::move(best), std::move(arg));
}

MaximalResult sharp_direct_impl(const GridFunction& f, const RadiiSet& radii,
                                std::size_t lo, std::size_t hi) {
    const std::size_t m = f.size();
    auto ks = ascending_radii(f, radii);
    std::vector<cld> p = prefix_sums(f.samples);
    std::vector<double> best(m, -1.0);
    std::vector<std::uint32_t> arg(m, 0);
    std::vector<double> vals(m, 0.0);
    for (std::size_t k : ks) {
        const std::size_t len = 2 * k + 1;
        const long double inv_len = 1.0L / static_cast<long double>(len);
        for (std::size_t c = lo; c <= hi; ++c) {
            cld a = window_sum(p, (c + m - k) % m, len) * inv_len;
            long double dev = 0.0L;
            for (std::size_t j = 0; j < len; ++j) {
                std::size_t idx = (c + m - k + j) % m;
                dev += std::abs(cld(f.samples[idx].real(), f.samples[idx].imag()) - a);
            }
            vals[c] = static_cast<double>(dev * inv_len);
        }
        merge_best(best, arg, vals, k, lo, hi);
    }
    return pack_result(f, radii, std::move(best), std::move(arg));
}

} // namespace

MaximalResult hardy_littlewood(const GridFunction& f, const RadiiSet& radii) {
    const std::size_t m = f.size();
    auto ks = ascending_radii(f, radii);
    std::vector<cplx> absf(m);
    for (std::size_t i = 0; i < m; ++i) absf[i] = cplx(std::abs(f.samples[i]), 0.0);
    std::vector<cld> p = prefix_sums(absf);
    std::vector<double> best(m, -1.0);
    std::vector<std::uint32_t> arg(m, 0);
    std::vector<double> vals(m, 0.0);
    for (std::size_t k : ks) {
        const std::size_t len = 2 * k + 1;
        const long double inv_len = 1.0L / static_cast<long double>(len);
        for (std::size_t c = 0; c < m; ++c)
            vals[c] = static_cast<double>(window_sum(p, (c + m - k) % m, len).real() * inv_len);
        merge_best(best, arg, vals, k, 0, m - 1);
    }
    return pack_result(f, radii, std::move(best), std::move(arg));
}

MaximalResult sharp_maximal(const GridFunction& f, const RadiiSet& radii) {
    if (f.is_real) return sharp_real_ranked(f, radii, 0, f.size() - 1);
    return sharp_direct_impl(f, radii, 0, f.size() - 1);
}

MaximalResult sharp_maximal_range(const GridFunction& f, const RadiiSet& radii,
                                  std::size_t lo, std::size_t hi) {
    if (lo > hi || hi >= f.size())
        throw config_error("sharp_maximal_range: need lo <= hi < size");
    if (f.is_real) return sharp_real_ranked(f, radii, lo, hi);
    return sharp_direct_impl(f, radii, lo, hi);
}

MaximalResult diamond_maximal(const GridFunction& f, const RadiiSet& radii) {
    const std::size_t m = f.size();
    auto ks = ascending_radii(f, radii);
    std::vector<cld> p = prefix_sums(f.samples);
    std::vector<double> best(m, -1.0);
    std::vector<std::uint32_t> arg(m, 0);
    std::vector<double> vals(m, 0.0);
    for (std::size_t k : ks) {
        const long double inv_len = 1.0L / static_cast<long double>(2 * k + 1);
        for (std::size_t c = 0; c < m; ++c) {
            cld wp = window_sum(p, (c + 1) % m, k);
            cld wm = window_sum(p, (c + m - k) % m, k);
            vals[c] = static_cast<double>(std::abs(wp - wm) * inv_len);
        }
        merge_best(best, arg, vals, k, 0, m - 1);
    }
    return pack_result(f, radii, std::move(best), std::move(arg));
}

MaximalResult tk_star(const GridFunction& f, const Kernel& kernel, const RadiiSet& radii) {
    const std::size_t m = f.size();
    auto ks = ascending_radii(f, radii);
    for (std::size_t k : ks)
        if (static_cast<double>(k) * kernel.support_radius > static_cast<double>(m) / 4.0)
            throw admissibility_error("tk_star: radius " + std::to_string(k) +
                                      " violates r * support_radius <= period/4");
    std::vector<cplx> spec_f = f.samples;
    fft_forward(spec_f);
    const double dx = f.grid.spacing();
    std::vector<double> best(m, -1.0);
    std::vector<std::uint32_t> arg(m, 0);
    std::vector<double> vals(m, 0.0);
    for (std::size_t k : ks) {
        GridFunction g = sample_scaled(f.grid, kernel, static_cast<double>(k) * dx);
        std::vector<cplx> spec = g.samples;
        fft_forward(spec);
        // kernel samples are centered at abscissa 0 (index m/2); the (-1)^q
        // twist rotates that origin to index 0 so the convolution aligns
        for (std::size_t q = 0; q < m; ++q)
            spec[q] = spec_f[q] * spec[q] * (dx * ((q & 1) ? -1.0 : 1.0));
        fft_inverse(spec);
        for (std::size_t i = 0; i < m; ++i) vals[i] = std::abs(spec[i]);
        merge_best(best, arg, vals, k, 0, m - 1);
    }
    return pack_result(f, radii, std::move(best), std::move(arg));
}

MaximalResult hardy_littlewood_direct(const GridFunction& f, const RadiiSet& radii) {
    const std::size_t m = f.size();
    auto ks = ascending_radii(f, radii);
    std::vector<double> best(m, -1.0);
    std::vector<std::uint32_t> arg(m, 0);
    std::vector<double> vals(m, 0.0);
    for (std::size_t k : ks) {
        const long double inv_len = 1.0L / static_cast<long double>(2 * k + 1);
        for (std::size_t c = 0; c < m; ++c) {
            long double s = 0.0L;
            for (std::size_t j = 0; j <= 2 * k; ++j)
                s += std::abs(cld(f.samples[(c + m - k + j) % m].real(),
                                  f.samples[(c + m - k + j) % m].imag()));
            vals[c] = static_cast<double>(s * inv_len);
        }
        merge_best(best, arg, vals, k, 0, m - 1);
    }
    return pack_result(f, radii, std::move(best), std::move(arg));
}

MaximalResult sharp_maximal_direct(const GridFunction& f, const RadiiSet& radii) {
    return sharp_direct_impl(f, radii, 0, f.size() - 1);
}

MaximalResult diamond_maximal_direct(const GridFunction& f, const RadiiSet& radii) {
    const std::size_t m = f.size();
    auto ks = ascending_radii(f, radii);
    std::vector<double> best(m, -1.0);
    std::vector<std::uint32_t> arg(m, 0);
    std::vector<double> vals(m, 0.0);
    for (std::size_t k : ks) {
        const long double inv_len = 1.0L / static_cast<long double>(2 * k + 1);
        for (std::size_t c = 0; c < m; ++c) {
            cld acc(0.0L, 0.0L);
            for (std::size_t j = 1; j <= k; ++j) {
                const cplx& up = f.samples[(c + j) % m];
                const cplx& dn = f.samples[(c + m - j) % m];
                acc += cld(up.real(), up.imag()) - cld(dn.real(), dn.imag());
            }
            vals[c] = static_cast<double>(std::abs(acc) * inv_len);
        }
        merge_best(best, arg, vals, k, 0, m - 1);
    }
    return pack_result(f, radii, std::move(best), std::move(arg));
}

MaximalResult tk_star_direct(const GridFunction& f, const Kernel& kernel,
                             const RadiiSet& radii) {
    const std::size_t m = f.size();
    auto ks = ascending_radii(f, radii);
    for (std::size_t k : ks)
        if (static_cast<double>(k) * kernel.support_radius > static_cast<double>(m) / 4.0)
            throw admissibility_error("tk_star_direct: radius " + std::to_string(k) +
                                      " violates r * support_radius <= period/4");
    const double dx = f.grid.spacing();
    std::vector<double> best(m, -1.0);
    std::vector<std::uint32_t> arg(m, 0);
    std::vector<double> vals(m, 0.0);
    for (std::size_t k : ks) {
        const double r = static_cast<double>(k) * dx;
        const long long reach =
            static_cast<long long>(std::ceil(static_cast<double>(k) * kernel.support_radius)) + 1;
        for (std::size_t c = 0; c < m; ++c) {
            cld acc(0.0L, 0.0L);
            for (long long j = -reach; j <= reach; ++j) {
                double kv = kernel.eval(static_cast<double>(j) * dx / r) / r;
                if (kv == 0.0) continue;
                std::size_t idx = static_cast<std::size_t>(
                    ((static_cast<long long>(c) - j) % static_cast<long long>(m) +
                     static_cast<long long>(m)) %
                    static_cast<long long>(m));
                acc += cld(f.samples[idx].real(), f.samples[idx].imag()) *
                       static_cast<long double>(kv);
            }
            vals[c] = static_cast<double>(std::abs(acc) * static_cast<long double>(dx));
        }
        merge_best(best, arg, vals, k, 0, m - 1);
    }
    return pack_result(f, radii, std::move(best), std::move(arg));
}

} // namespace maxlp
