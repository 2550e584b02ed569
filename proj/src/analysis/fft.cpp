#include "synviz/analysis/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace synviz::analysis {

namespace {

const std::vector<std::complex<double>>& twiddles(std::size_t n) {
  thread_local std::size_t cached_n = 0;
  thread_local std::vector<std::complex<double>> table;
  if (cached_n != n) {
    table.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      table[k] = {std::cos(angle), std::sin(angle)};
    }
    cached_n = n;
  }
  return table;
}

}  // namespace

void fft_in_place(std::span<std::complex<double>> data) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("fft size must be a power of two");
  }

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const auto& w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> t = w[k * stride] * data[start + k + half];
        const std::complex<double> u = data[start + k];
        data[start + k] = u + t;
        data[start + k + half] = u - t;
      }
    }
  }
}

std::vector<std::complex<double>> fft(std::span<const double> signal) {
  std::vector<std::complex<double>> out(signal.begin(), signal.end());
  fft_in_place(out);
  return out;
}

}  // namespace synviz::analysis
