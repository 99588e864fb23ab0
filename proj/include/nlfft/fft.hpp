#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Radix-2 complex FFT kernels. Two implementations share the same plan:
// a plain serial loop nest, kept as the reference, and an OpenMP variant
// that fans the butterflies of each stage across threads for large
// transforms. fft() / ifft() dispatch on size.
namespace nlfft::fft {

using cd = std::complex<double>;

enum class Exec { serial, parallel, automatic };

std::size_t next_pow2(std::size_t n);

// In-place transforms; data.size() must be a power of two.
// The inverse includes the 1/n scaling.
void fft_inplace(std::vector<cd>& data, Exec exec = Exec::automatic);
void ifft_inplace(std::vector<cd>& data, Exec exec = Exec::automatic);

void fft_serial_inplace(std::vector<cd>& data);
void ifft_serial_inplace(std::vector<cd>& data);
void fft_parallel_inplace(std::vector<cd>& data);
void ifft_parallel_inplace(std::vector<cd>& data);

// O(n^2) direct transform, test oracle only.
std::vector<cd> dft_reference(const std::vector<cd>& data, bool inverse);

}  // namespace nlfft::fft
