#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "maxlp/fft.hpp"

namespace maxlp {

/// Uniform grid on the circle of circumference `period`: sample i sits at
/// x_i = i*spacing() - period/2, so index center() is x = 0. Both period and
/// size are powers of two, which keeps every dyadic dilation on-grid.
struct TorusGrid {
    double period = 0.0;
    std::size_t size = 0;

    double spacing() const { return period / static_cast<double>(size); }
    std::size_t center() const { return size / 2; }
    double abscissa(std::size_t i) const {
        return static_cast<double>(i) * spacing() - period / 2.0;
    }
    /// Largest representable frequency magnitude, size/(2*period).
    double nyquist() const { return static_cast<double>(size) / (2.0 * period); }
    /// Top usable dyadic band index: log2(size/(2*period)) - 1. The widened
    /// band at j_max is the last one whose plateau still covers a full band.
    int band_limit_index() const;

    bool operator==(const TorusGrid&) const = default;
};

/// Validates: period a power of two >= 2, size a power of two >= 16.
TorusGrid make_grid(double period, std::size_t size);

/// Samples of a function on a TorusGrid. Complex-valued storage; is_real marks
/// functions whose imaginary parts are identically (numerically) zero, which
/// unlocks the fast paths in the maximal operators.
struct GridFunction {
    TorusGrid grid;
    std::vector<cplx> samples;
    bool is_real = true;

    std::size_t size() const { return samples.size(); }
};

GridFunction zeros(const TorusGrid& grid);
GridFunction sample_real(const TorusGrid& grid, const std::function<double(double)>& f);
GridFunction sample_complex(const TorusGrid& grid, const std::function<cplx(double)>& f);

/// Pointwise product; both factors must share a grid.
GridFunction multiply(const GridFunction& a, const GridFunction& b);

enum class Norm { l1, l2, linf };

/// Left-endpoint Riemann sums: l1 = spacing*sum|f|, l2 = sqrt(spacing*sum|f|^2),
/// linf = max|f|. Accumulation in long double.
double norm(const GridFunction& f, Norm which);

/// Circular shift by s samples: out[i] = f[(i - s) mod M], i.e. f moved right.
GridFunction circular_shift(const GridFunction& f, long long s);

/// Symmetric window mean over indices i-k..i+k (circular), computed from
/// circular prefix sums in O(M). Requires 1 <= k <= M/2 - 1.
GridFunction ball_average(const GridFunction& f, std::size_t k);

/// Dyadic dilation (Dil_m f)(x) = f(2^m x).
///
/// m >= 0: exact index subsampling out[i] = f[(2^m * i) mod M]; the output
/// lives on the shrunken grid (period/2^m, size/2^m) with the same spacing,
/// so compact support, L2 mass, and the round trip below behave like the
/// continuum operation. Requires period/2^m >= 2 and size/2^m >= 16.
///
/// m < 0: exact trigonometric interpolation onto the enlarged grid
/// (2^|m| * period, 2^|m| * size), same spacing. Requires f band-limited to
/// |xi| < size/(2*period*2^|m|), checked spectrally; dilate_dyadic(
/// dilate_dyadic(f, m), -m) = f to rounding for such f.
GridFunction dilate_dyadic(const GridFunction& f, int m);

/// Set of window radii in index units; radius k means physical radius
/// k*spacing. Invariant: sorted ascending, 1 <= k <= size/2 - 1.
struct RadiiSet {
    std::vector<std::size_t> indices;
    bool dyadic_closed = false;
    std::string description; // "dyadic", "all", or "list"
};

/// Default production set {2^j : j = 0..log2(M/4)}; top radius M/4 keeps every
/// window inside a quarter period (cap r <= L/4).
RadiiSet dyadic_radii(const TorusGrid& grid);

/// Exhaustive set {1..M/4}; intended as the oracle mode on small grids.
RadiiSet all_radii(const TorusGrid& grid);

RadiiSet radii_from_list(const TorusGrid& grid, std::vector<std::size_t> indices);

/// Divide every radius by 2^m, keeping integer results >= 1. Dyadic-closed
/// sets stay dyadic-closed; radii below 2^m are dropped (they fall under the
/// resolution of the dilated grid).
RadiiSet divide_radii(const RadiiSet& radii, int m);

/// Human-readable cap statement recorded in sidecars and reports.
std::string radius_cap_note(const TorusGrid& grid);

} // namespace maxlp
