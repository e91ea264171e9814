#include "maxlp/constructions.hpp"

#include <cmath>
#include <vector>

#include "maxlp/errors.hpp"
#include "maxlp/spectral.hpp"

namespace maxlp {
namespace {

const double two_pi = 2.0 * std::acos(-1.0);

double sin_frac(double z) {
    // z is a dyadic rational held exactly; so is z - floor(z). Reducing the
    // phase into [-1/2, 1/2) and zeroing the half-period points keeps the
    // sampled sine exactly odd: sin_frac(-z) == -sin_frac(z) for every z.
    double u = z - std::floor(z);
    double v = u >= 0.5 ? u - 1.0 : u;
    if (v == 0.0 || v == -0.5) return 0.0;
    return std::sin(two_pi * v);
}

// antiderivative of S_N at t, for the piecewise closed-form integrals
double lacunary_antiderivative(double t, int n_terms) {
    double acc = 0.0;
    for (int k = 1; k <= n_terms; ++k) {
        double p = std::exp2(k);
        double z = p * t;
        acc -= std::cos(two_pi * (z - std::floor(z))) / (two_pi * p);
    }
    return acc;
}

} // namespace

double lacunary_value(double t, int n_terms) {
    double acc = 0.0;
    for (int k = 1; k <= n_terms; ++k) acc += sin_frac(std::exp2(k) * t);
    return acc;
}

GridFunction lacunary_sum(const TorusGrid& grid, int n_terms) {
    if (n_terms < 1) throw config_error("lacunary_sum: need at least one term");
    if (n_terms > max_admissible_terms(grid))
        throw admissibility_error("lacunary_sum: top frequency 2^" + std::to_string(n_terms) +
                                  " too close to Nyquist; max admissible N = " +
                                  std::to_string(max_admissible_terms(grid)));
    const std::size_t m = grid.size;
    const double log2_scale = std::log2(grid.period) - std::log2(static_cast<double>(m));
    GridFunction out = zeros(grid);
    for (int k = 1; k <= n_terms; ++k) {
        const double scale = std::exp2(static_cast<double>(k) + log2_scale);
        for (std::size_t i = 0; i < m; ++i) {
            double steps = static_cast<double>(i) - static_cast<double>(m / 2);
            out.samples[i] += sin_frac(steps * scale);
        }
    }
    return out;
}

double lacunary_l1_unit_interval(int n_terms) {
    if (n_terms < 1) throw config_error("lacunary_l1_unit_interval: need at least one term");
    // scan resolution: >= 2^9 points per period of the fastest term
    const long long n = std::max(1LL << 16, 1LL << std::min(n_terms + 9, 24));
    const double h = 1.0 / static_cast<double>(n);

    std::vector<double> cuts;
    cuts.push_back(0.0);
    double prev_t = 0.0, prev_v = lacunary_value(0.0, n_terms);
    for (long long i = 1; i <= n; ++i) {
        const double t = static_cast<double>(i) * h;
        const double v = lacunary_value(t, n_terms);
        if (v == 0.0) {
            cuts.push_back(t);
        } else if (prev_v != 0.0 && ((prev_v < 0.0) != (v < 0.0))) {
            double a = prev_t, b = t, fa = prev_v;
            for (int it = 0; it < 50; ++it) {
                double mid = 0.5 * (a + b);
                double fm = lacunary_value(mid, n_terms);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0.0) != (fm < 0.0))
                    b = mid;
                else {
                    a = mid;
                    fa = fm;
                }
            }
            cuts.push_back(0.5 * (a + b));
        }
        prev_t = t;
        prev_v = v;
    }
    if (cuts.back() != 1.0) cuts.push_back(1.0);

    long double total = 0.0L;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        double piece = lacunary_antiderivative(cuts[s + 1], n_terms) -
                       lacunary_antiderivative(cuts[s], n_terms);
        total += std::abs(static_cast<long double>(piece));
    }
    return static_cast<double>(total);
}

GridFunction bump_psi(const TorusGrid& grid) {
    if (grid.period < 16.0)
        throw admissibility_error("bump_psi: period must be >= 16 so supp psi = [-4, 4] fits");
    return sample_real(grid, [](double x) { return phi(std::abs(x) / 2.0); });
}

int max_admissible_terms(const TorusGrid& grid) {
    return grid.band_limit_index() - 1;
}

GridFunction make_FN(const TorusGrid& grid, int n_terms) {
    const int cap = max_admissible_terms(grid);
    if (n_terms < 1 || n_terms > cap)
        throw admissibility_error("make_FN: N=" + std::to_string(n_terms) +
                                  " outside [1, " + std::to_string(cap) + "] for this grid");
    return multiply(bump_psi(grid), lacunary_sum(grid, n_terms));
}

int dilation_exponent(int n_terms) {
    if (n_terms < 1) throw config_error("dilation_exponent: N must be positive");
    int m = 0;
    while ((2 << m) <= n_terms) ++m;
    return m;
}

GridFunction make_fN(const TorusGrid& grid, int n_terms) {
    return dilate_dyadic(make_FN(grid, n_terms), dilation_exponent(n_terms));
}

GridFunction modulated_bump(const TorusGrid& grid, double lambda) {
    const double cap = static_cast<double>(grid.size) / (4.0 * grid.period);
    if (!(lambda >= 1.0 && lambda <= cap))
        throw admissibility_error("modulated_bump: lambda outside [1, size/(4*period)]");
    GridFunction psi = bump_psi(grid);
    GridFunction out = sample_complex(grid, [&](double x) {
        return cplx(std::cos(two_pi * lambda * x), std::sin(two_pi * lambda * x));
    });
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] *= psi.samples[i].real();
    return out;
}

} // namespace maxlp
