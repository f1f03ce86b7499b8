#pragma once

#include <complex>
#include <span>

namespace cvq::fft {

// In-place unnormalized DFTs backed by FFTW. Plans are created once per
// length (FFTW_ESTIMATE | FFTW_UNALIGNED, so results do not depend on buffer
// alignment) and executed through the thread-safe new-array interface.
void forward(std::span<std::complex<double>> data);
void inverse(std::span<std::complex<double>> data);

}  // namespace cvq::fft
