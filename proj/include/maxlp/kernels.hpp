#pragma once

#include <functional>
#include <string>
#include <vector>

#include "maxlp/grid.hpp"

namespace maxlp {

// A compactly supported convolution kernel with declared shape facts.
// `eval` is the pointwise definition; the scalar fields are what the
// declared kernel is supposed to satisfy and are cross-checked in tests
// via kernel_tv and direct scans.
struct Kernel {
    std::string name;
    double support_radius = 1.0;
    std::vector<double> jumps; // discontinuity locations
    bool mean_zero = false;
    double tv_norm = 0.0;
    double sup_norm = 0.0;
    std::function<double(double)> eval;
};

// Odd step: sign(x)/2 for 0 < |x| <= 1, zero elsewhere and at the origin.
// Mean zero, total variation 2, sup 1/2.
Kernel diamond_kernel();

// Box: 1/2 on [-1, 1], zero outside. Total variation 1, sup 1/2.
Kernel box_kernel();

// Smooth odd bump c * x * exp(-1/(1-x^2)) on (-1,1), scaled to sup 1/2.
// Mean zero, total variation 2, no jumps. Used in refinement studies.
Kernel smooth_test_kernel();

// Numerical total variation over one period of the real line copy:
// declared jump sizes via one-sided limits plus a fine partition sum on
// each smooth segment. Accurate to ~1e-5 for the kernels above.
double kernel_tv(const Kernel& k);

// Samples of K_r(x) = K(x/r)/r on the grid, r in physical units.
// Requires 2 * r * support_radius < period so the support fits in one period.
GridFunction sample_scaled(const TorusGrid& grid, const Kernel& k, double r);

} // namespace maxlp
