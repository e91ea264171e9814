#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace maxlp {

using cplx = std::complex<double>;

/// In-place forward DFT, F[q] = sum_j f[j] exp(-2 pi i j q / n).
/// n must be a power of two. Twiddle/bit-reversal tables are cached per size
/// behind a shared mutex, so concurrent calls are safe.
void fft_forward(std::vector<cplx>& data);

/// In-place inverse DFT including the 1/n factor; exact inverse of fft_forward
/// up to rounding.
void fft_inverse(std::vector<cplx>& data);

/// Signed frequency index for DFT bin q of an n-point transform:
/// q for q < n/2, q - n otherwise (the q = n/2 bin reads as -n/2).
inline long long signed_bin(std::size_t q, std::size_t n) {
    return q < n / 2 ? static_cast<long long>(q)
                     : static_cast<long long>(q) - static_cast<long long>(n);
}

} // namespace maxlp
