#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "maxlp/grid.hpp"

namespace maxlp {

// Smooth cutoff used by every frequency projection below.
// phi(t) = 1 for t <= 1, 0 for t >= 2, strictly decreasing in between;
// phi(1.5) = 0.5 by symmetry of the glue.
double phi(double t);

enum class MultKind { low, band, widened };

// Multiplier samples m(|xi_q|) on the signed bins of `grid`.
//   low:     phi(|xi| / 2^j)
//   band:    phi(|xi| / 2^j) - phi(|xi| / 2^{j-1})
//   widened: phi(|xi| / 2^{j+1}) - phi(|xi| / 2^{j-2})
// Values are cached per (period, size, kind, j); the returned pointer stays
// valid for the life of the process.
std::shared_ptr<const std::vector<double>> multiplier_values(const TorusGrid& grid,
                                                             MultKind kind, int j);

// Frequency projection: inverse FFT of (multiplier .* FFT(f)).
// For kind != low, requires 1 <= j <= grid.band_limit_index().
GridFunction project(const GridFunction& f, MultKind kind, int j);

struct BesovReport {
    double low_band = 0.0;                        // ||P_{<=0} f||_inf
    std::vector<std::pair<int, double>> bands;    // (j, ||P_j f||_inf)
    double besov_part = 0.0;                      // low_band + max over bands
    int j_max = 0;                                // grid truncation used
};

struct BNormReport {
    BesovReport besov;
    double l2_part = 0.0;
    double total = 0.0; // besov.besov_part + l2_part
};

BesovReport besov_norm(const GridFunction& f);
BNormReport b_norm(const GridFunction& f);

// sup norm of f - (P_{<=0} f + sum_{j=1..J} P_j f); identically ~0 when
// J = band_limit_index because the band multipliers telescope to low_J
// and low_J covers every representable frequency.
double telescope_residual(const GridFunction& f, int J);

// Bump of unit mass: rho(x) = c * exp(-1/(1-x^2)) on (-1,1), scaled so the
// grid quadrature sums to exactly 1. Requires period >= 4.
GridFunction mollifier(const TorusGrid& grid);

// Convolution f * rho via FFT (quadrature weight spacing() included).
GridFunction mollifier_apply(const GridFunction& f);

// Real-space kernel h with \hat h = m on the grid's bins:
// h[i] = (1/period) * sum_q m_q (-1)^q e^{2 pi i q i / size}.
GridFunction kernel_from_multiplier(const TorusGrid& grid,
                                    const std::vector<double>& mult);

// d/dx via the 2*pi*i*xi multiplier; the unpaired Nyquist bin is zeroed.
GridFunction spectral_derivative(const GridFunction& f);

// Circular convolution with quadrature weight, reading the second factor as a
// function of signed displacement on the centered abscissas:
//   (f ** g)(x_i) = spacing * sum_j f(x_j) g(x_i - x_j).
GridFunction convolve(const GridFunction& f, const GridFunction& g);

} // namespace maxlp
