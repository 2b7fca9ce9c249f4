#include "torkam/grid_fft.hpp"

#include <unsupported/Eigen/FFT>

#include "torkam/error.hpp"

namespace torkam::detail {

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft_nd(std::vector<std::complex<double>>& data, int dim, int grid_size, bool inverse) {
    const int G = grid_size;
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(G);
    require(data.size() == total, ErrorKind::Dimension, "fft_nd: buffer size mismatch");

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> line(G), out(G);

    // Transform along each axis in turn; lines along `axis` have stride
    // G^(dim-1-axis) in the row-major layout.
    for (int axis = 0; axis < dim; ++axis) {
        std::size_t stride = 1;
        for (int i = axis + 1; i < dim; ++i) stride *= static_cast<std::size_t>(G);
        const std::size_t block = stride * static_cast<std::size_t>(G);
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t start = base + off;
                for (int j = 0; j < G; ++j) line[j] = data[start + stride * j];
                if (inverse) {
                    fft.inv(out, line);  // applies 1/G; undo below
                    for (int j = 0; j < G; ++j) out[j] *= double(G);
                } else {
                    fft.fwd(out, line);
                }
                for (int j = 0; j < G; ++j) data[start + stride * j] = out[j];
            }
        }
    }
}

}  // namespace torkam::detail
