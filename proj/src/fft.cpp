#include "ate/fft.hpp"

#include "ate/errors.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

namespace ate {

FftPlan::FftPlan(std::size_t n) : n_(n) {
    if (n == 0 || !std::has_single_bit(n))
        throw ConfigError("FFT length must be a power of two");
    const unsigned bits = static_cast<unsigned>(std::countr_zero(n));
    bit_reverse_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (unsigned b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b))
                r |= std::size_t{1} << (bits - 1 - b);
        bit_reverse_[i] = r;
    }
    twiddles_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        twiddles_[k] = {std::cos(angle), std::sin(angle)};
    }
}

void FftPlan::transform(std::span<std::complex<double>> data, bool backward) const {
    if (data.size() != n_)
        throw ConfigError("FFT input length mismatch");
    for (std::size_t i = 0; i < n_; ++i)
        if (i < bit_reverse_[i])
            std::swap(data[i], data[bit_reverse_[i]]);

    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t step = n_ / len;
        for (std::size_t start = 0; start < n_; start += len) {
            for (std::size_t j = 0; j < half; ++j) {
                auto w = twiddles_[j * step];
                if (backward)
                    w = std::conj(w);
                const auto u = data[start + j];
                const auto v = w * data[start + j + half];
                data[start + j] = u + v;
                data[start + j + half] = u - v;
            }
        }
    }
}

} // namespace ate
