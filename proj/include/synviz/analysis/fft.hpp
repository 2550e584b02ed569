#pragma once

#include <complex>
#include <span>
#include <vector>

namespace synviz::analysis {

/// Forward DFT of a real signal, X[k] = sum x[n] e^{-2 pi i k n / N}.
/// Iterative radix-2; input length must be a power of two.
std::vector<std::complex<double>> fft(std::span<const double> signal);

/// In-place radix-2 transform.
void fft_in_place(std::span<std::complex<double>> data);

}  // namespace synviz::analysis
