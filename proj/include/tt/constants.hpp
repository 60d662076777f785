#pragma once

#include <cstddef>
#include <vector>

namespace tt {

// Precomputed scale row for one size: s(N,k) is periodic in k with period
// N/4, so only k in [0, N/4) is stored (a single 1.0 for N <= 4).
struct ScaleTable {
    std::size_t n = 0;
    std::vector<double> s;

    double at(std::size_t k) const {
        return s[s.size() > 1 ? (k & (s.size() - 1)) : 0];
    }
};

// Memoized, immutable scale row for size N (read-only after construction).
const ScaleTable& scale_table(std::size_t N);

// s(N,k): positive scale factor defined by the quarter-size recurrence
//   s(N,k) = s(N/4,k4) * cos(2*pi*k4/N)  for k4 = k mod N/4 <= N/8
//          = s(N/4,k4) * sin(2*pi*k4/N)  otherwise
// with s(N,k) = 1 for N <= 4. Properties: s(N,0) = 1, period N/4 in k,
// s(N, N/4 - k) = s(N,k), s(N,k) > 0.
double scale_factor(std::size_t N, std::size_t k);

// Modified twiddle t(N,k) = w_N^k * s(N/4,k)/s(N,k). Always of the form
// 1 - i*tan(2*pi*k/N) or cot(2*pi*k/N) - i; the unit component is stored as
// the literal 1.0 so multiply code paths can skip it structurally.
struct TwiddleT {
    enum class UnitAxis { real, imaginary };
    double re = 1.0;
    double im = 0.0;
    UnitAxis unit_axis = UnitAxis::real;
};

TwiddleT twiddle_t(std::size_t N, std::size_t k);

// Precomputed complex constant w_{8N}^{2k+1} * s(2N,2k+1) used by the
// DCT-IV output loop; |value| = s(2N,2k+1).
struct FusedConstant {
    double re = 0.0;
    double im = 0.0;
};

FusedConstant fused_dct4_constant(std::size_t N, std::size_t k);

}  // namespace tt
