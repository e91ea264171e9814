#pragma once

#include "maxlp/grid.hpp"

namespace maxlp {

// S_N(t) = sum_{k=1..N} sin(2 pi 2^k t), evaluated with exact dyadic phase
// reduction so the argument of each sine is computed without rounding.
double lacunary_value(double t, int n_terms);
GridFunction lacunary_sum(const TorusGrid& grid, int n_terms);

// integral over [0,1] of |S_N|: zeros located by sign change on a fine scan
// plus bisection, each piece integrated with the closed-form antiderivative
// sum_k -cos(2 pi 2^k t)/(2 pi 2^k). Grows like sqrt(N / pi).
double lacunary_l1_unit_interval(int n_terms);

// psi(x) = phi(|x| / 2): 1 on |x| <= 2, 0 on |x| >= 4. Requires period >= 16
// so the support sits well inside one period.
GridFunction bump_psi(const TorusGrid& grid);

// F_N = psi * S_N on the full grid. Requires 1 <= N <= max_admissible_terms.
GridFunction make_FN(const TorusGrid& grid, int n_terms);

// dilation exponent m_N = floor(log2 N)
int dilation_exponent(int n_terms);

// f_N = F_N(2^{m_N} x) realized by dyadic decimation; lives on the grid
// (period / 2^{m_N}, size / 2^{m_N}) with the same spacing.
GridFunction make_fN(const TorusGrid& grid, int n_terms);

// psi(x) e^{2 pi i lambda x}; smooth on the torus for any real lambda since
// psi vanishes near the period boundary. Requires 1 <= lambda <= size/(4*period).
GridFunction modulated_bump(const TorusGrid& grid, double lambda);

// largest N for which make_FN / make_fN accept this grid:
// log2(size / (2 * period)) - 2
int max_admissible_terms(const TorusGrid& grid);

} // namespace maxlp
