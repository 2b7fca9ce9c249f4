#pragma once

#include <cstdint>
#include <random>

#include "torkam/spectral_field.hpp"
#include "torkam/torus_algebra.hpp"

namespace torkam::testing {

inline IntMatrix fib_matrix() {
    IntMatrix m(2, 2);
    m << 2, 1, 1, 1;
    return m;
}

inline IntMatrix plastic_matrix() {
    IntMatrix m(3, 3);
    m << 0, 0, 1, 1, 0, 1, 0, 1, 0;
    return m;
}

/// Dense random field supported on the full ball |n| <= cutoff, coefficients
/// uniform in [-amp, amp]^2 scaled by exp(-decay * |n|). Mean-zero unless
/// with_mean is set.
inline SpectralField random_field(int dim, int cutoff, std::uint64_t seed, double amp = 1.0,
                                  double decay = 0.0, bool with_mean = false) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    SpectralField f(dim, cutoff);

    std::vector<Freq> stack;
    Freq n = Freq::Zero(dim);
    // iterative odometer over the box, keeping canonical |n| <= cutoff
    std::vector<int> idx(dim, -cutoff);
    while (true) {
        for (int k = 0; k < dim; ++k) n(k) = idx[k];
        long long nn = 0;
        for (int k = 0; k < dim; ++k) nn += static_cast<long long>(idx[k]) * idx[k];
        if (nn > 0 && nn <= static_cast<long long>(cutoff) * cutoff &&
            SpectralField::is_canonical(n)) {
            Coeff c(dim);
            const double scale = amp * std::exp(-decay * std::sqrt(double(nn)));
            for (int k = 0; k < dim; ++k)
                c(k) = std::complex<double>(unif(rng), unif(rng)) * scale;
            f.set(n, c);
        }
        int k = dim - 1;
        while (k >= 0 && ++idx[k] > cutoff) idx[k--] = -cutoff;
        if (k < 0) break;
    }
    if (with_mean) {
        Eigen::VectorXd m(dim);
        for (int k = 0; k < dim; ++k) m(k) = unif(rng) * amp;
        f.set_zero_mode(m);
    }
    return f;
}

}  // namespace torkam::testing
