#pragma once

#include <complex>
#include <vector>

namespace torkam::detail {

/// In-place complex DFT along every axis of a row-major d-dimensional cube
/// of side G (axis 0 slowest). Unnormalized: forward uses exp(-2*pi*i),
/// inverse uses exp(+2*pi*i); neither applies a 1/G factor.
void fft_nd(std::vector<std::complex<double>>& data, int dim, int grid_size, bool inverse);

/// Smallest power of two >= n.
int next_pow2(int n);

}  // namespace torkam::detail
