#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxlp/grid.hpp"
#include "maxlp/kernels.hpp"

namespace maxlp {

// Pointwise maximum over a finite radius set, with the witness radius.
// argmax_radius[i] is the radius index k (r = k * spacing) attaining
// values[i]; ties resolve to the smallest radius.
struct MaximalResult {
    GridFunction values;
    std::vector<std::uint32_t> argmax_radius;
    RadiiSet radii;
    std::string cap_note;
};

// Centered window averages of |f|:  max_k  (1/(2k+1)) sum_{|j|<=k} |f(i+j)|.
MaximalResult hardy_littlewood(const GridFunction& f, const RadiiSet& radii);

// Mean absolute deviation from the window mean:
//   max_k (1/(2k+1)) sum_{|j|<=k} |f(i+j) - A_{i,k}|,  A_{i,k} = window mean.
// Real input runs an O(M log M)-per-radius sliding rank structure; complex
// input falls back to the direct loop (slow, intended for small grids).
MaximalResult sharp_maximal(const GridFunction& f, const RadiiSet& radii);

// Same operator evaluated only at centers lo..hi (inclusive, no wrap in the
// center range); entries outside the range are zero.
MaximalResult sharp_maximal_range(const GridFunction& f, const RadiiSet& radii,
                                  std::size_t lo, std::size_t hi);

// Odd-window imbalance:  max_k |W+ - W-| / (2k+1) with
// W+ = sum_{j=1..k} f(i+j), W- = sum_{j=1..k} f(i-j).
MaximalResult diamond_maximal(const GridFunction& f, const RadiiSet& radii);

// Kernel maximal function: max_k |(f * K_r)(x_i)| with r = k * spacing and
// the convolution done spectrally. Every k must satisfy
// k * support_radius <= size/4 (i.e. r * support_radius <= period/4).
MaximalResult tk_star(const GridFunction& f, const Kernel& kernel,
                      const RadiiSet& radii);

// Brute-force reference evaluators, O(M * k) per radius. Same contracts.
MaximalResult hardy_littlewood_direct(const GridFunction& f, const RadiiSet& radii);
MaximalResult sharp_maximal_direct(const GridFunction& f, const RadiiSet& radii);
MaximalResult diamond_maximal_direct(const GridFunction& f, const RadiiSet& radii);
MaximalResult tk_star_direct(const GridFunction& f, const Kernel& kernel,
                             const RadiiSet& radii);

} // namespace maxlp
