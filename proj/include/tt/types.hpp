#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tt {

using RealVec = std::vector<double>;
using Cplx = std::complex<double>;
using ComplexVec = std::vector<Cplx>;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// log2 of a power of two
inline std::size_t lg2(std::size_t n) {
    std::size_t m = 0;
    while ((std::size_t{1} << m) < n) ++m;
    return m;
}

}  // namespace tt
