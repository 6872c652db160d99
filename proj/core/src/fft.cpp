#include "fdo/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace fdo {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<std::complex<double>>& data) {
  const std::size_t n = data.size();
  if (!is_power_of_two(static_cast<int>(n))) {
    throw std::invalid_argument("fft_radix2: size must be a power of two");
  }
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  constexpr double kPi = 3.14159265358979323846;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> step(std::cos(angle), std::sin(angle));
    for (std::size_t block = 0; block < n; block += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = data[block + k];
        const std::complex<double> v = data[block + k + len / 2] * w;
        data[block + k] = u + v;
        data[block + k + len / 2] = u - v;
        w *= step;
      }
    }
  }
}

}  // namespace fdo
