#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ate {

/// Iterative radix-2 Cooley-Tukey transform of a fixed power-of-two length.
/// Unnormalized: forward uses e^{-2 pi i jk/N}, backward e^{+2 pi i jk/N}.
/// A plan is immutable and may be shared between threads.
class FftPlan {
  public:
    explicit FftPlan(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    void forward(std::span<std::complex<double>> data) const { transform(data, false); }
    void backward(std::span<std::complex<double>> data) const { transform(data, true); }

  private:
    void transform(std::span<std::complex<double>> data, bool backward) const;

    std::size_t n_;
    std::vector<std::size_t> bit_reverse_;
    std::vector<std::complex<double>> twiddles_; // e^{-2 pi i k/N}, k < N/2
};

} // namespace ate
