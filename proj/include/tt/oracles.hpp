#pragma once

#include "tt/types.hpp"

namespace tt {

// Naive O(N^2) definitional transforms, used as ground truth by tests and by
// the `verify` CLI command. Direct summation in natural index order; the trig
// constants come from per-size tables of std::cos/std::sin values at the
// exactly reduced angles (the kernels are periodic), which changes nothing
// about the summation itself. All kernels are unnormalized.

// X_k = sum_n x_n e^{-2*pi*i*n*k/N}
ComplexVec naive_dft(const ComplexVec& x);

// C_k = sum_{n=0}^{N-1} x_n cos[(pi/N) n (k+1/2)]
RealVec naive_dct3(const RealVec& x);

// S_k = sum_{n=1}^{N} x_n sin[(pi/N) n (k+1/2)]; element j of the argument
// holds x_{j+1} (0-based storage of the 1-based sequence).
RealVec naive_dst3(const RealVec& x);

// C_k = sum_n x_n cos[(pi/N) (n+1/2) (k+1/2)]
RealVec naive_dct4(const RealVec& x);

// S_k = sum_n x_n sin[(pi/N) (n+1/2) (k+1/2)]
RealVec naive_dst4(const RealVec& x);

// C_k = sum_{n=0}^{2N-1} x_n cos[(pi/N) (n+1/2+N/2) (k+1/2)], k = 0..N-1
RealVec naive_mdct(const RealVec& x);

// y_n = sum_k C_k cos[(pi/N) (n+1/2+N/2) (k+1/2)], n = 0..2N-1
RealVec naive_imdct(const RealVec& C);

}  // namespace tt
