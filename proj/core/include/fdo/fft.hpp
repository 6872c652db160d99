#pragma once

#include <complex>
#include <vector>

namespace fdo {

bool is_power_of_two(int n);

/// In-place radix-2 transform with the e^{-2*pi*i*j*m/N} sign convention.
/// Size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data);

}  // namespace fdo
