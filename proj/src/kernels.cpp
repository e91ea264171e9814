#include "maxlp/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "maxlp/errors.hpp"

namespace maxlp {
namespace {

double odd_bump_raw(double x) {
    double u = 1.0 - x * x;
    return u > 0.0 ? x * std::exp(-1.0 / u) : 0.0;
}

double odd_bump_peak() {
    // single interior maximum on (0,1); a dense scan is plenty here
    static const double peak = [] {
        double best = 0.0;
        for (int i = 1; i < 200000; ++i)
            best = std::max(best, odd_bump_raw(i / 200000.0));
        return best;
    }();
    return peak;
}

} // namespace

Kernel diamond_kernel() {
    Kernel k;
    k.name = "diamond";
    k.support_radius = 1.0;
    k.jumps = {-1.0, 0.0, 1.0};
    k.mean_zero = true;
    k.tv_norm = 2.0;
    k.sup_norm = 0.5;
    k.eval = [](double x) {
        double ax = std::abs(x);
        if (ax == 0.0 || ax > 1.0) return 0.0;
        return x > 0.0 ? 0.5 : -0.5;
    };
    return k;
}

Kernel box_kernel() {
    Kernel k;
    k.name = "box";
    k.support_radius = 1.0;
    k.jumps = {-1.0, 1.0};
    k.mean_zero = false;
    k.tv_norm = 1.0;
    k.sup_norm = 0.5;
    k.eval = [](double x) { return std::abs(x) <= 1.0 ? 0.5 : 0.0; };
    return k;
}

Kernel smooth_test_kernel() {
    Kernel k;
    k.name = "smooth_odd";
    k.support_radius = 1.0;
    k.jumps = {};
    k.mean_zero = true;
    k.tv_norm = 2.0;
    k.sup_norm = 0.5;
    const double c = 0.5 / odd_bump_peak();
    k.eval = [c](double x) { return c * odd_bump_raw(x); };
    return k;
}

double kernel_tv(const Kernel& k) {
    const double eps = 1e-7;
    double tv = 0.0;
    for (double loc : k.jumps) tv += std::abs(k.eval(loc + eps) - k.eval(loc - eps));

    std::vector<double> cuts = k.jumps;
    cuts.push_back(-k.support_radius - 0.5);
    cuts.push_back(k.support_radius + 0.5);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        double a = cuts[s] + eps, b = cuts[s + 1] - eps;
        if (b <= a) continue;
        const int n = std::max(64, static_cast<int>(std::ceil((b - a) * 50000.0)));
        double prev = k.eval(a);
        for (int t = 1; t <= n; ++t) {
            double cur = k.eval(a + (b - a) * t / n);
            tv += std::abs(cur - prev);
            prev = cur;
        }
    }
    return tv;
}

GridFunction sample_scaled(const TorusGrid& grid, const Kernel& k, double r) {
    if (r <= 0.0) throw config_error("sample_scaled: r must be positive");
    if (2.0 * r * k.support_radius >= grid.period)
        throw admissibility_error("sample_scaled: scaled support does not fit in one period");
    const double inv_r = 1.0 / r;
    return sample_real(grid, [&](double x) { return k.eval(x * inv_r) * inv_r; });
}

} // namespace maxlp
