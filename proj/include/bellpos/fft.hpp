#pragma once

#include <complex>

namespace bellpos::fft {

/// In-place unnormalized DFT, x[m] = Σ_j x[j] exp(-2πi m j / n).
void forward(std::complex<double>* data, int n);

/// In-place unnormalized inverse, x[j] = Σ_m x[m] exp(+2πi m j / n).
/// forward∘backward = n·identity.
void backward(std::complex<double>* data, int n);

}  // namespace bellpos::fft
